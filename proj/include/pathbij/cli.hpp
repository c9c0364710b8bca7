#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathbij {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Runs the command line `args` (args[0] is the program name).
///
/// Returns exit_ok on success, exit_failed on a verification or comparison
/// mismatch or an inverse-domain error, exit_usage on bad arguments or input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pathbij
