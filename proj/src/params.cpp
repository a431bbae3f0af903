#include "cycloid/params.hpp"

#include <stdexcept>

namespace cycloid {

CycloidParams::CycloidParams(long long alpha, long long beta, long long gamma, long long delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  if (alpha < 1 || beta < 1 || gamma < 1 || delta < 1)
    throw std::invalid_argument("cycloid parameters must be positive integers");
  area_ = checked_add(checked_mul(alpha_, delta_), checked_mul(beta_, gamma_));
}

std::string CycloidParams::str() const {
  return "C(" + std::to_string(alpha_) + "," + std::to_string(beta_) + "," +
         std::to_string(gamma_) + "," + std::to_string(delta_) + ")";
}

}  // namespace cycloid
