#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pomset::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pomset::cli
