#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a2w {

// Runs the command-line tool on the given arguments (excluding argv[0]),
// writing the report to `out` and diagnostics to `err`. Returns the exit
// code: 0 success, 1 suite failure or terminal error state, 2 malformed
// input. Factored out of main() so tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a2w
