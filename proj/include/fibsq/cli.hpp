#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibsq {

/// Exit codes of the fibsq command.
enum ExitCode : int {
    exit_ok = 0,
    exit_divergence = 1,
    exit_usage = 2,
    exit_capacity = 3,
};

/// Runs `fibsq <args...>` (args exclude the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibsq
