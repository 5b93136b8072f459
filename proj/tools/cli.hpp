#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphtok::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Human-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphtok::cli
