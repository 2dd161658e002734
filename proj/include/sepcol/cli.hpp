#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepcol {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,          // success, colourable, valid
  kExitNegative = 1,    // not colourable, invalid, no clique found
  kExitUsage = 2,       // bad usage, unreadable input, violated hypothesis
};

/// Runs one command. `args` excludes the program name. Results go to `out` as
/// JSON; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcol
