#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace webweave::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 success, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace webweave::cli
