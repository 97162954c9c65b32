#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goppa {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unreadable or malformed input
  kExitInvalid = 2,     // parameters or lengths rejected
  kExitDecode = 3,      // no codeword within distance t
  kExitInternal = 4,    // q and sigma locators disagreed
};

/// Runs one command line (without the program name). `in` supplies words that are not given as flags.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace goppa
