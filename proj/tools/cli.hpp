#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dioph::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kPreconditionViolation = 3,
  kBudgetExhausted = 4,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
