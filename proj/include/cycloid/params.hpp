#pragma once

#include <string>

#include "cycloid/arith.hpp"

namespace cycloid {

/// The defining quadruple of a cycloid. All four entries are positive; the
/// area alpha*delta + beta*gamma equals the number of transitions of the net
/// the cycloid folds to.
class CycloidParams {
 public:
  CycloidParams() : CycloidParams(1, 1, 1, 1) {}
  CycloidParams(long long alpha, long long beta, long long gamma, long long delta);

  long long alpha() const { return alpha_; }
  long long beta() const { return beta_; }
  long long gamma() const { return gamma_; }
  long long delta() const { return delta_; }
  long long area() const { return area_; }

  CycloidParams symmetric() const { return {beta_, alpha_, delta_, gamma_}; }

  bool operator==(const CycloidParams&) const = default;
  auto operator<=>(const CycloidParams&) const = default;

  std::string str() const;  // "C(2,3,3,3)"

 private:
  long long alpha_, beta_, gamma_, delta_;
  long long area_;
};

}  // namespace cycloid
