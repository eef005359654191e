#pragma once

#include <string>
#include <vector>

namespace hcs::cli {

/// Parses and executes one CLI invocation.  Exit status: 0 success,
/// 1 usage or domain error, 2 verification failure.
int run(const std::vector<std::string>& args);

} // namespace hcs::cli
