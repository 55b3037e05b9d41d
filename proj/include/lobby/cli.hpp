#ifndef LOBBY_CLI_HPP
#define LOBBY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lobby::cli {

/// Runs one CLI invocation (args excludes the program name) and writes the
/// report to `out` and diagnostics to `err`.
/// Exit codes: 0 feasible/success, 1 infeasible, 2 error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace lobby::cli

#endif
