#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fov {

/// Command dispatch for the `fov` tool. Exit codes: 0 success, 1 verification
/// failure, 2 usage/parse error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fov
