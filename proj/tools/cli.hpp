#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarnet::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kArgumentError = 2,
  kFormatError = 3,
  kInfeasible = 4,
  kIoError = 5,
  kUndefinedResult = 6,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarnet::cli
