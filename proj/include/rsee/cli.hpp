#pragma once

#include <iosfwd>

namespace rsee {

enum ExitStatus : int { kExitOk = 0, kExitDecodeFailure = 1, kExitUsage = 2 };

// Entry point of the `rsee` command line tool. Subcommands: encode, corrupt,
// decode, bench, selftest. Returns 0 on success, 1 when some block failed to
// decode (or a bench/selftest check failed), 2 on usage or input errors.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace rsee
