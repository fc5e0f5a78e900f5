#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gainflow {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitBudget = 3 };

// Runs one command; `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gainflow
