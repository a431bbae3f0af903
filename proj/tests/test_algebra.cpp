#include <doctest.h>

#include <random>
#include <set>

#include "cycloid/algebra.hpp"

using namespace cycloid;

namespace {

// Deterministic sample of small parameter quadruples for property sweeps.
std::vector<CycloidParams> sample_params(int count, long long max_param, long long max_area,
                                         unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> dist(1, max_param);
  std::vector<CycloidParams> out;
  while (static_cast<int>(out.size()) < count) {
    CycloidParams c{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (c.area() <= max_area) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation and area") {
  CHECK(CycloidParams(2, 3, 3, 3).area() == 15);
  CHECK(CycloidParams(5, 3, 2, 6).area() == 36);
  CHECK(CycloidParams(4, 2, 2, 3).area() == 16);
  CHECK_THROWS_AS(CycloidParams(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CycloidParams(1, 1, -2, 1), std::invalid_argument);
}

TEST_CASE("pi_vector worked examples") {
  CycloidParams c{2, 3, 3, 3};
  auto [m, n] = pi_vector(c, {-2, 3});
  CHECK(m == Rational{-1, 1});
  CHECK(n == Rational{0, 1});

  auto [m0, n0] = pi_vector(c, {0, 0});
  CHECK(m0 == Rational{0, 1});
  CHECK(n0 == Rational{0, 1});

  // v = A-matrix * (1,0) column of C(4,2,2,3) is (4,-2), so pi gives (1,0).
  CycloidParams c2{4, 2, 2, 3};
  CHECK(lattice_point(c2, 1, 0) == Point{4, -2});
  auto [m1, n1] = pi_vector(c2, {4, -2});
  CHECK(m1 == Rational{1, 1});
  CHECK(n1 == Rational{0, 1});
}

TEST_CASE("equivalence worked examples") {
  CycloidParams c{2, 3, 3, 3};
  CHECK(equivalent(c, {4, -1}, {2, 2}));
  CHECK(equivalent(c, {7, 7}, {7, 7}));
  CHECK_FALSE(equivalent(c, {2, 2}, {2, 1}));
}

TEST_CASE("rho worked examples") {
  CHECK(rho({2, 3, 3, 3}, {9, -1}) == Point{2, 2});
  CHECK(rho({2, 4, 3, 2}, {15, -9}) == Point{3, -1});
  CHECK(rho({2, 4, 3, 2}, {5, 11}) == Point{3, -1});
  CHECK(rho({2, 3, 3, 3}, {0, 0}) == Point{0, 0});
}

TEST_CASE("fundamental parallelogram membership") {
  CHECK(in_fundamental_parallelogram({2, 3, 3, 3}, {2, 2}));
  CHECK_FALSE(in_fundamental_parallelogram({2, 3, 3, 3}, {4, -1}));
  CHECK(in_fundamental_parallelogram({4, 2, 2, 3}, {5, 0}));
}

TEST_CASE("xi_max examples and rho-scan oracle") {
  CHECK(xi_max({4, 2, 2, 3}) == 5);
  CHECK(xi_max({2, 3, 6, 2}) == 7);
  CHECK(xi_max({8, 1, 6, 2}) == 10);
  CHECK(xi_max({1, 1, 1, 1}) == 1);

  // Oracle: largest xi with (xi, 0) rho-fixed, scanned directly.
  for (const CycloidParams& c : sample_params(40, 9, 100, 7)) {
    long long scanned = 0;
    for (long long xi = 0; xi <= c.area(); ++xi)
      if (in_fundamental_parallelogram(c, {xi, 0})) scanned = xi;
    CHECK(xi_max(c) == scanned);
  }
}

TEST_CASE("backward neighbours of the origin") {
  CHECK(origin_backward_neighbors({10, 3, 2, 2}) == std::pair{Point{10, -2}, Point{2, 1}});
  CHECK(origin_backward_neighbors({1, 1, 1, 1}) == std::pair{Point{1, 0}, Point{1, 0}});
  CHECK(origin_backward_neighbors({5, 3, 2, 6}) == std::pair{Point{5, -2}, Point{2, 5}});

  // The closed forms must agree with folding (0,1) and (0,-1) directly.
  for (const CycloidParams& c : sample_params(40, 9, 100, 11)) {
    auto [out_t, in_t] = origin_backward_neighbors(c);
    CHECK(out_t == rho(c, {0, 1}));
    CHECK(in_t == rho(c, {0, -1}));
  }
}

TEST_CASE("corners") {
  CHECK(corners({2, 3, 3, 3}).r == Point{5, 0});
  CHECK(corners({4, 2, 2, 3}).p == Point{4, -2});
  CHECK(corners({4, 2, 2, 3}).q == Point{2, 3});
  CHECK(corners({1, 1, 1, 1}).r == Point{2, 0});
  CHECK(corners({1, 1, 1, 1}).o == Point{0, 0});
}

TEST_CASE("rho is idempotent, equivalent and commutes with successors") {
  for (const CycloidParams& c : sample_params(12, 8, 60, 23)) {
    const long long w = 4 * c.area();
    for (long long xi = -w; xi <= w; xi += 7)
      for (long long eta = -w; eta <= w; eta += 5) {
        Point u{xi, eta};
        Point f = rho(c, u);
        CHECK(equivalent(c, u, f));
        CHECK(rho(c, f) == f);
        CHECK(rho(c, {u.xi + 1, u.eta}) == rho(c, {f.xi + 1, f.eta}));
        CHECK(rho(c, {u.xi, u.eta + 1}) == rho(c, {f.xi, f.eta + 1}));
      }
  }
}

TEST_CASE("the parallelogram holds exactly A transitions, rho image is unique") {
  for (const CycloidParams& c : sample_params(12, 8, 60, 31)) {
    std::vector<Point> members;
    for (long long xi = 0; xi <= c.alpha() + c.gamma(); ++xi)
      for (long long eta = -c.beta(); eta <= c.delta(); ++eta)
        if (in_fundamental_parallelogram(c, {xi, eta})) members.push_back({xi, eta});
    CHECK(static_cast<long long>(members.size()) == c.area());

    // Uniqueness: a probe point is equivalent to exactly one member, rho(u).
    std::mt19937 rng(31 * c.area());
    std::uniform_int_distribution<long long> span(-3 * c.area(), 3 * c.area());
    for (int k = 0; k < 25; ++k) {
      Point u{span(rng), span(rng)};
      int hits = 0;
      for (Point f : members)
        if (equivalent(c, u, f)) ++hits;
      CHECK(hits == 1);
      CHECK(equivalent(c, u, rho(c, u)));
    }
  }
}

TEST_CASE("equivalence is an equivalence relation on a window") {
  CycloidParams c{3, 2, 4, 5};
  std::vector<Point> pts;
  for (long long xi = -6; xi <= 6; xi += 2)
    for (long long eta = -6; eta <= 6; eta += 2) pts.push_back({xi, eta});
  for (Point a : pts) {
    CHECK(equivalent(c, a, a));
    for (Point b : pts) {
      CHECK(equivalent(c, a, b) == equivalent(c, b, a));
      for (Point d : pts)
        if (equivalent(c, a, b) && equivalent(c, b, d)) CHECK(equivalent(c, a, d));
    }
  }
}
