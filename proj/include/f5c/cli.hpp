#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f5c::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParseError = 2,
  kComputationError = 3,
};

/// Runs the command line `args` (without the program name). The basis or
/// benchmark table goes to `out`; traces and diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f5c::cli
