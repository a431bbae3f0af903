// Compares the OpenMP oracle kernels against their serial references on a
// few net sizes. Build and run manually:
//   cmake --build build --target bench_oracles && ./build/bench/bench_oracles

#include <chrono>
#include <cstdio>

#include "cycloid/net.hpp"
#include "cycloid/oracle.hpp"
#include "cycloid/params.hpp"
#include "cycloid/reduce.hpp"

using namespace cycloid;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  const CycloidParams cases[] = {
      {8, 9, 10, 11}, {20, 13, 17, 19}, {31, 29, 23, 37}, {50, 41, 43, 47}};

  std::printf("%-16s %6s | %12s %12s | %12s %12s\n", "params", "|T|", "cycle ser", "cycle omp",
              "iso ser", "iso omp");
  for (const CycloidParams& c : cases) {
    CycloidNet net = generate_net(c);
    CycloidNet sheared = generate_net(apply_rule(c, rule_applicable(c, Rule::Delta)
                                                        ? Rule::Delta
                                                        : Rule::Beta));
    long long serial_len = 0, parallel_len = 0;
    double t_cycle_s = time_ms([&] { serial_len = shortest_cycle_serial(net); }, 3);
    double t_cycle_p = time_ms([&] { parallel_len = shortest_cycle(net); }, 3);
    bool ser_found = false, par_found = false;
    double t_iso_s = time_ms([&] { ser_found = find_isomorphism_serial(net, sheared).has_value(); }, 3);
    double t_iso_p = time_ms([&] { par_found = find_isomorphism(net, sheared).has_value(); }, 3);
    if (serial_len != parallel_len || ser_found != par_found) {
      std::printf("MISMATCH on %s\n", c.str().c_str());
      return 1;
    }
    std::printf("%-16s %6d | %9.3f ms %9.3f ms | %9.3f ms %9.3f ms\n", c.str().c_str(),
                net.transition_count(), t_cycle_s, t_cycle_p, t_iso_s, t_iso_p);
  }
  return 0;
}
