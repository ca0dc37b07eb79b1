#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trb::cli {

/// Exit codes of run().
enum Exit : int { kPass = 0, kMathFailure = 1, kInvalidInput = 2 };

/// Parses `args` (without the program name) and executes one command.
/// Reports go to `out`, usage diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trb::cli
