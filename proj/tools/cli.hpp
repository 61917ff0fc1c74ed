#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elliptic::cli {

enum ExitCode { ok = 0, usage = 2, contradiction = 3 };

// Runs one command line (without the program name). Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elliptic::cli
