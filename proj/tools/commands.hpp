#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grich::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kInsufficientPrefix = 3,
  kRefuted = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grich::cli
