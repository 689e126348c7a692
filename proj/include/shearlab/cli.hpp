#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shearlab {

// Runs the command-line tool on the given arguments (without argv[0]) and
// returns the process exit code: 0 success, 1 verification failure,
// 2 input/geometry error, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shearlab
