#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tatami::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 for domain or input errors, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tatami::cli
