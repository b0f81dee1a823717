#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superdirac {

/// Runs the command line given argv-style arguments (without the program
/// name).  Exit codes: 0 success, 1 identity failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace superdirac
