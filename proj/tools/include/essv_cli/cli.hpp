#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace essv::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInconsistent = 3 };

/// Runs one command line (without the program name). Output is buffered
/// and written to `out` / `err` only when the command finishes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace essv::cli
