#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkit {

/// Runs one command line (without the program name). Returns 0 when every
/// check passes, 1 on a law or axiom violation (witness on `out` as JSON),
/// 2 on a parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkit
