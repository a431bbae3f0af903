#include "cycloid/algebra.hpp"

namespace cycloid {

namespace {

Rational make_rational(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 0) throw std::invalid_argument("zero denominator");
  return {narrow(num), narrow(den)};
}

}  // namespace

std::pair<Rational, Rational> pi_vector(const CycloidParams& c, Point v) {
  // (1/A) * B * v with B = ((delta, -gamma), (beta, alpha)).
  __int128 top = (__int128)c.delta() * v.xi - (__int128)c.gamma() * v.eta;
  __int128 bot = (__int128)c.beta() * v.xi + (__int128)c.alpha() * v.eta;
  return {make_rational(top, c.area()), make_rational(bot, c.area())};
}

bool equivalent(const CycloidParams& c, Point x1, Point x2) {
  Point v = x2 - x1;
  __int128 top = (__int128)c.delta() * v.xi - (__int128)c.gamma() * v.eta;
  __int128 bot = (__int128)c.beta() * v.xi + (__int128)c.alpha() * v.eta;
  return top % c.area() == 0 && bot % c.area() == 0;
}

Point rho(const CycloidParams& c, Point u) {
  __int128 m = floor_div_wide((__int128)u.xi * c.delta() - (__int128)u.eta * c.gamma(), c.area());
  __int128 n = floor_div_wide((__int128)u.eta * c.alpha() + (__int128)u.xi * c.beta(), c.area());
  __int128 xi = u.xi - (m * c.alpha() + n * c.gamma());
  __int128 eta = u.eta - (-m * c.beta() + n * c.delta());
  return {narrow(xi), narrow(eta)};
}

bool in_fundamental_parallelogram(const CycloidParams& c, Point u) {
  return rho(c, u) == u;
}

long long xi_max(const CycloidParams& c) {
  return ceil_div(c.area(), std::max(c.beta(), c.delta())) - 1;
}

std::pair<Point, Point> origin_backward_neighbors(const CycloidParams& c) {
  return {Point{c.alpha(), 1 - c.beta()}, Point{c.gamma(), c.delta() - 1}};
}

Corners corners(const CycloidParams& c) {
  return {Point{0, 0},
          Point{c.alpha(), -c.beta()},
          Point{c.gamma(), c.delta()},
          Point{c.alpha() + c.gamma(), c.delta() - c.beta()}};
}

Point lattice_point(const CycloidParams& c, long long m, long long n) {
  long long xi = checked_add(checked_mul(m, c.alpha()), checked_mul(n, c.gamma()));
  long long eta = checked_add(checked_mul(-m, c.beta()), checked_mul(n, c.delta()));
  return {xi, eta};
}

}  // namespace cycloid
