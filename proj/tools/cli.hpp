#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace complicial {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitBudget = 2, kExitInput = 3 };

// Parses args (without the program name) and runs one subcommand. Human
// summaries go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace complicial
