#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowforge {

/// Runs the command line (arguments without the program name). Exit codes:
/// 0 success or equality, 1 a check failed or ideals differ, 2 usage, parse or
/// parameter error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowforge
