#include <doctest.h>

#include "cycloid/net.hpp"

using namespace cycloid;

namespace {

std::vector<CycloidParams> all_quadruples(long long max_param, long long max_area) {
  std::vector<CycloidParams> out;
  for (long long a = 1; a <= max_param; ++a)
    for (long long b = 1; b <= max_param; ++b)
      for (long long g = 1; g <= max_param; ++g)
        for (long long d = 1; d <= max_param; ++d) {
          CycloidParams c{a, b, g, d};
          if (c.area() <= max_area) out.push_back(c);
        }
  return out;
}

}  // namespace

TEST_CASE("generated net sizes") {
  CHECK(generate_net({2, 3, 3, 3}).transition_count() == 15);
  CHECK(generate_net({5, 3, 2, 6}).transition_count() == 36);
  CycloidNet tiny = generate_net({1, 1, 1, 1});
  CHECK(tiny.transition_count() == 2);
  CHECK(tiny.forward_count() == 2);
  CHECK(tiny.backward_count() == 2);
  CHECK(tiny.well_formed());
}

TEST_CASE("flow respects the fold: f(3,-1) feeds t(2,2) in C(2,3,3,3)") {
  CycloidParams c{2, 3, 3, 3};
  CycloidNet net = generate_net(c);
  int t = net.transition_at({2, 2});
  REQUIRE(t >= 0);
  int owner = net.transition_at({3, -1});
  REQUIRE(owner >= 0);
  CHECK(net.fw_in(t) == net.fw_out(owner));
  CHECK(net.fw_next(owner) == t);
}

TEST_CASE("degree invariants and place counts up to area 200") {
  for (const CycloidParams& c : all_quadruples(7, 200)) {
    CycloidNet net = generate_net(c);
    REQUIRE(net.well_formed());
    CHECK(net.transition_count() == c.area());
    CHECK(net.forward_count() == c.area());
    CHECK(net.backward_count() == c.area());
    // finalize() proved each transition has exactly one place of each role;
    // spot check the navigation round trips.
    for (int t = 0; t < net.transition_count(); t += 7) {
      CHECK(net.fw_prev(net.fw_next(t)) == t);
      CHECK(net.bw_prev(net.bw_next(t)) == t);
    }
  }
}

TEST_CASE("standard marking counts") {
  auto counts = [](const CycloidParams& c) {
    CycloidNet net = generate_net(c);
    Marking m = standard_marking(c, net);
    int fw = 0, bw = 0;
    for (int p = 0; p < net.forward_count(); ++p) fw += m.test(net.global_forward(p));
    for (int p = 0; p < net.backward_count(); ++p) bw += m.test(net.global_backward(p));
    return std::pair{fw, bw};
  };
  CHECK(counts({2, 3, 3, 3}) == std::pair{3, 2});
  CHECK(counts({1, 1, 1, 1}) == std::pair{1, 1});
  CHECK(counts({4, 2, 2, 3}) == std::pair{2, 4});
  for (const CycloidParams& c : all_quadruples(6, 200))
    CHECK(counts(c) == std::pair{static_cast<int>(c.beta()), static_cast<int>(c.alpha())});
}

TEST_CASE("token game on the two-transition cycloid") {
  CycloidParams c{1, 1, 1, 1};
  CycloidNet net = generate_net(c);
  Marking m = standard_marking(c, net);

  std::vector<int> active;
  for (int t = 0; t < net.transition_count(); ++t)
    if (enabled(net, m, t)) active.push_back(t);
  REQUIRE(active.size() == 1);

  Marking next = fire(net, m, active[0]);
  int other = 1 - active[0];
  CHECK(enabled(net, next, other));
  CHECK_FALSE(enabled(net, next, active[0]));
  CHECK_THROWS_AS(fire(net, next, active[0]), std::invalid_argument);

  Marking empty(net.place_count());
  for (int t = 0; t < net.transition_count(); ++t) CHECK_FALSE(enabled(net, empty, t));
  CHECK_THROWS_AS(enabled(net, m, 99), std::out_of_range);
}

TEST_CASE("firing conserves tokens per place type") {
  CycloidParams c{2, 3, 3, 3};
  CycloidNet net = generate_net(c);
  Marking m = standard_marking(c, net);
  auto type_counts = [&](const Marking& mk) {
    int fw = 0, bw = 0;
    for (int p = 0; p < net.forward_count(); ++p) fw += mk.test(net.global_forward(p));
    for (int p = 0; p < net.backward_count(); ++p) bw += mk.test(net.global_backward(p));
    return std::pair{fw, bw};
  };
  auto base = type_counts(m);
  for (int round = 0; round < 40; ++round) {
    int t = 0;
    while (!enabled(net, m, t)) ++t;
    m = fire(net, m, t);
    CHECK(type_counts(m) == base);
  }
}

TEST_CASE("a run firing every transition once returns to the start") {
  CycloidParams c{2, 3, 3, 3};
  CycloidNet net = generate_net(c);
  Marking m0 = standard_marking(c, net);
  Marking m = m0;
  std::vector<char> done(net.transition_count(), 0);
  for (long long k = 0; k < c.area(); ++k) {
    int pick = -1;
    for (int t = 0; t < net.transition_count(); ++t)
      if (!done[t] && enabled(net, m, t)) {
        pick = t;
        break;
      }
    REQUIRE(pick >= 0);
    done[pick] = 1;
    m = fire(net, m, pick);
  }
  CHECK(m == m0);
}

TEST_CASE("exploration: safety and liveness") {
  auto run = [](const CycloidParams& c, long long budget) {
    CycloidNet net = generate_net(c);
    return explore(net, standard_marking(c, net), budget);
  };

  ExploreResult seasons = run({2, 1, 2, 1}, 100000);
  CHECK(seasons.safe);
  CHECK(seasons.live);
  CHECK(seasons.complete);

  ExploreResult tiny = run({1, 1, 1, 1}, 100000);
  CHECK(tiny.states == 2);
  CHECK(tiny.safe);
  CHECK(tiny.live);

  ExploreResult canon = run({2, 3, 3, 3}, 100000);
  CHECK(canon.safe);
  CHECK(canon.live);

  ExploreResult starved = run({2, 3, 3, 3}, 3);
  CHECK_FALSE(starved.complete);
}

TEST_CASE("exploration over all quadruples with area <= 60") {
  for (const CycloidParams& c : all_quadruples(6, 60)) {
    CycloidNet net = generate_net(c);
    ExploreResult r = explore(net, standard_marking(c, net), 2'000'000);
    CAPTURE(c.str());
    CHECK(r.complete);
    CHECK(r.safe);
    CHECK(r.live);
  }
}

TEST_CASE("strong connectivity of generated nets") {
  CHECK(strongly_connected(generate_net({3, 2, 4, 5})));
  CHECK(strongly_connected(generate_net({1, 1, 1, 1})));
}
