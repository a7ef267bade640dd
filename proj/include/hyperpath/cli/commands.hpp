#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpath::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpath::cli
