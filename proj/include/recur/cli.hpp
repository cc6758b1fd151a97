#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recur {

// Full command-line driver, callable in-process for tests. `args` excludes
// the program name. Exit codes: 0 success, 1 malformed input, 2 mathematical
// refusal (the request is well-formed but provably not satisfiable),
// 3 budget or precision exhausted.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace recur
