#pragma once

// Text formats used by the CLI.
//
// Block file:
//   rs <n> <k> <m> <prim_poly_hex>
//   <n space-separated decimal symbols, '?' for an erasure>
//   ...
// Message file: one message per line, k space-separated decimal symbols.
// Blank lines and lines starting with '#' are skipped in both.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsee/codec.hpp"

namespace rsee {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BlockHeader {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned m = 0;
  std::uint32_t prim_poly = 0;

  // Builds the field and code; throws FormatError(1, ...) when inconsistent.
  CodeParams params() const;
  static BlockHeader of(const CodeParams& params);
};

struct BlockFile {
  BlockHeader header;
  std::vector<ReceivedWord> blocks;
};

// Throws FormatError on any malformed line.
BlockFile read_block_file(std::istream& in);
void write_block_file(std::ostream& out, const BlockHeader& header,
                      const std::vector<ReceivedWord>& blocks);

// Throws FormatError on malformed lines or a message of the wrong length.
std::vector<Message> read_messages(std::istream& in, const CodeParams& params);
Message parse_message(const std::string& line, const CodeParams& params);
void write_message(std::ostream& out, const Message& message);

// Parses "0x11d", "11D" or "11d" as hexadecimal; throws std::invalid_argument.
std::uint32_t parse_hex(const std::string& text);
std::string format_hex(std::uint32_t value);

}  // namespace rsee
