#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycloid::cli {

/// Dispatches one invocation. Exit codes: 0 success (including negative
/// domain answers such as `iso` printing false), 1 verification failure,
/// 2 usage or input error, 3 broken internal invariant.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycloid::cli
