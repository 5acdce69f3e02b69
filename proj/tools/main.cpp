#include <iostream>

#include "rsee/cli.hpp"

int main(int argc, char** argv) { return rsee::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
