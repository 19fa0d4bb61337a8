#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riesz::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInfeasible = 3,
  kUnsupported = 4,
};

/// Entry point behind the `riesz` executable. `args` excludes the program
/// name. Never throws; every failure maps to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
