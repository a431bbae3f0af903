#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "cycloid/params.hpp"

namespace cycloid {

/// A transition coordinate (xi, eta) in the Petri space grid.
struct Point {
  long long xi = 0;
  long long eta = 0;

  auto operator<=>(const Point&) const = default;
  Point operator+(Point o) const { return {xi + o.xi, eta + o.eta}; }
  Point operator-(Point o) const { return {xi - o.xi, eta - o.eta}; }
  std::string str() const { return "(" + std::to_string(xi) + "," + std::to_string(eta) + ")"; }
};

/// Exact fraction, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  bool is_integer() const { return den == 1; }
  bool operator==(const Rational&) const = default;
};

/// The fold multiplicities (1/A) * B * v, computed exactly. Both entries are
/// integers exactly when the endpoints of v are equivalent.
std::pair<Rational, Rational> pi_vector(const CycloidParams& c, Point v);

/// True iff x1 and x2 fold to the same transition of the cycloid.
bool equivalent(const CycloidParams& c, Point x1, Point x2);

/// The unique equivalent point inside the fundamental parallelogram.
/// Idempotent; rho(c, u) == u is the membership test for the parallelogram.
Point rho(const CycloidParams& c, Point u);

bool in_fundamental_parallelogram(const CycloidParams& c, Point u);

/// Largest xi with (xi, 0) inside the fundamental parallelogram.
long long xi_max(const CycloidParams& c);

/// Parallelogram representatives of the backward output and backward input
/// transitions of the origin: (t_{alpha,1-beta}, t_{gamma,delta-1}).
std::pair<Point, Point> origin_backward_neighbors(const CycloidParams& c);

struct Corners {
  Point o, p, q, r;
};
Corners corners(const CycloidParams& c);

/// The lattice point reached by fold multiplicities (m, n): the cycloid
/// matrix ((alpha, gamma), (-beta, delta)) applied to (m, n).
Point lattice_point(const CycloidParams& c, long long m, long long n);

}  // namespace cycloid

template <>
struct std::hash<cycloid::Point> {
  std::size_t operator()(const cycloid::Point& p) const noexcept {
    std::size_t h = std::hash<long long>{}(p.xi);
    return h * 1000003u ^ std::hash<long long>{}(p.eta);
  }
};
