#pragma once

#include <stdexcept>

namespace cycloid {

/// Violations of the typed marked-graph structure, cut searches that cannot
/// complete, and synthesis applied to inputs that are not cycloid nets.
struct net_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cycloid
