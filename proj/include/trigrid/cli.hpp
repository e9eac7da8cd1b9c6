// cli.hpp - command-line driver, separated from main() so tests can call it
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigrid::cli {

// Runs one command.  args excludes the program name.  Data goes to out,
// diagnostics to err.  Exit codes: 0 success, 1 verification failure,
// 2 usage or validation error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace trigrid::cli
