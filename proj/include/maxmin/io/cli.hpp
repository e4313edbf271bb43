#pragma once

// Command-line frontend. Subcommands: eigen, orbit, check-conforming, solve,
// robust, verify.

#include <ostream>
#include <string>
#include <vector>

namespace maxmin::io {

/// Process exit codes; the only signal scripts need.
enum ExitCode : int {
  kHolds = 0,         // property holds / solved uniquely
  kFails = 1,         // property fails; a witness is printed
  kInapplicable = 2,  // preconditions not met, or no solution
  kUsage = 3,         // bad command line
  kInputError = 4,    // unreadable or invalid instance, or oracle limits exceeded
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxmin::io
