#pragma once

#include <string>
#include <vector>

namespace sincivp {

// Runs the sinc-ivp command line (subcommands: solve, converge, bench).
// Returns the process exit code: 0 on success, 2 for bad arguments,
// 3 when the solver failed for every requested cell.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace sincivp
