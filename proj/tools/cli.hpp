#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uniauto::cli {

/// Runs one command line (without the program name). Returns 0 for
/// accept/equal/confirmed, 1 for reject/counterexample and 2 for
/// budget exhaustion or a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uniauto::cli
