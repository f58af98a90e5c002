#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxorder::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kAllHold = 0,
  kSomeFail = 1,
  kInconclusive = 2,
  kContradiction = 3,
  kUsageError = 4,
  kDomainError = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxorder::cli
