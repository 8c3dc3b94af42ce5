#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptrace::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalid = 2, kBudget = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptrace::cli
