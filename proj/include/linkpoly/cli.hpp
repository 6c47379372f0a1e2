#pragma once

// Command-line front end. One canonical polynomial per line on stdout.
// Exit codes: 0 success, 1 input/validation error, 2 internal verification
// failure (oracle mismatch).

#include <iosfwd>
#include <string>
#include <vector>

namespace linkpoly {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linkpoly
