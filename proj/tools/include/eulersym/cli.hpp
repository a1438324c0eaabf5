#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersym {

/// Runs the command-line tool on `args` (without the program name).
/// Returns the process exit code: 0 success, 1 identity failure,
/// 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersym
