#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thag {

// Full command-line driver, separated from main() so tests can run it against
// string streams. `args` excludes the program name. Exit codes: 0 success,
// 1 verification failure or arithmetic breakdown, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thag
