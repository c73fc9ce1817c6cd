#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace billiard {

/// Command-line entry point. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 for domain errors (bad input), 2 for
/// internal consistency failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace billiard
