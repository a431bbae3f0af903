#include "cycloid/cycles.hpp"

#include <numeric>
#include <stdexcept>

namespace cycloid {

long long forward_cycle_length(const CycloidParams& c) {
  return c.area() / std::gcd(c.beta(), c.delta());
}

long long backward_cycle_length(const CycloidParams& c) {
  return c.area() / std::gcd(c.alpha(), c.gamma());
}

bool is_regular(const CycloidParams& c) { return c.delta() % c.beta() == 0; }
bool is_co_regular(const CycloidParams& c) { return c.gamma() % c.alpha() == 0; }
bool is_canonical_regular(const CycloidParams& c) {
  return c.beta() == c.gamma() && c.gamma() == c.delta();
}

CycResult cyc_candidate(const CycloidParams& c, long long j) {
  if (j < 1) throw std::invalid_argument("cycle fold count j must be >= 1");
  long long i = c.alpha() <= c.beta()
                    ? floor_div(checked_mul(j, c.delta()), c.beta())
                    : -floor_div(checked_mul(j, c.gamma()), c.alpha());
  long long len = checked_add(checked_mul(j, c.gamma() + c.delta()),
                              checked_mul(i, c.alpha() - c.beta()));
  return {len, i, j};
}

CycResult cyc_general(const CycloidParams& c) {
  const bool left = c.alpha() <= c.beta();
  const long long j_bound = left ? c.area() / c.gamma() : c.area() / c.delta();
  // Every candidate satisfies len >= j*A/beta (resp. j*A/alpha), so the scan
  // can stop as soon as that lower bound passes the best value found.
  const long long denom = left ? c.beta() : c.alpha();
  CycResult best = cyc_candidate(c, 1);
  for (long long j = 2; j <= j_bound; ++j) {
    if ((__int128)j * c.area() > (__int128)best.cyc * denom) break;
    CycResult cand = cyc_candidate(c, j);
    if (cand.cyc < best.cyc) best = cand;
  }
  return best;
}

long long cyc_lbc(const CycloidParams& c) {
  long long correction = c.alpha() <= c.beta()
                             ? checked_mul(floor_div(c.delta(), c.beta()), c.alpha() - c.beta())
                             : checked_mul(-floor_div(c.gamma(), c.alpha()), c.alpha() - c.beta());
  return checked_add(c.gamma() + c.delta(), correction);
}

bool is_lbc(const CycloidParams& c) { return cyc_lbc(c) == cyc_general(c).cyc; }

long long cyc_regular(const CycloidParams& c) {
  if (c.alpha() <= c.beta()) {
    if (!is_regular(c))
      throw std::invalid_argument(c.str() + " is not regular (beta does not divide delta)");
    return c.gamma() + (c.delta() / c.beta()) * c.alpha();  // == A / beta
  }
  if (!is_co_regular(c))
    throw std::invalid_argument(c.str() + " is not co-regular (alpha does not divide gamma)");
  return c.delta() + (c.gamma() / c.alpha()) * c.beta();  // == A / alpha
}

CycleReport analyze_cycles(const CycloidParams& c) {
  CycleReport r;
  r.forward_len = forward_cycle_length(c);
  r.backward_len = backward_cycle_length(c);
  CycResult g = cyc_general(c);
  r.cyc = g.cyc;
  r.witness_i = g.witness_i;
  r.witness_j = g.witness_j;
  r.lbc = cyc_lbc(c) == g.cyc;
  r.regular = is_regular(c);
  r.co_regular = is_co_regular(c);
  r.canonical_regular = is_canonical_regular(c);
  return r;
}

}  // namespace cycloid
