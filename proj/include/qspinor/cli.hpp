#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspinor {

/// Command-line entry point. Exit codes: 0 all checks pass / success,
/// 1 verification failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qspinor
