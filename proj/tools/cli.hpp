#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpd::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 2 on invalid input, 1 on internal errors or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpd::cli
