#include "cycloid/oracle.hpp"

#include <climits>
#include <deque>

namespace cycloid {

namespace {

void require_well_formed(const CycloidNet& net) {
  if (!net.well_formed())
    throw net_error("malformed net: " + (net.issues().empty() ? std::string("no structure")
                                                              : net.issues().front()));
}

// Shortest cycle through `start`, or LLONG_MAX. BFS visits transitions in
// nondecreasing distance, so the first edge back into `start` is minimal.
long long cycle_through(const CycloidNet& net, int start, long long upper) {
  std::vector<int> dist(net.transition_count(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    if (dist[t] + 1 >= upper) return LLONG_MAX;
    for (int u : {net.fw_next(t), net.bw_next(t)}) {
      if (u == start) return dist[t] + 1;
      if (dist[u] < 0) {
        dist[u] = dist[t] + 1;
        queue.push_back(u);
      }
    }
  }
  return LLONG_MAX;
}

// Extends the anchor assignment t0 -> anchor across both successor and
// predecessor links; fails on any conflict. Returns the complete transition
// map or an empty vector.
std::vector<int> propagate(const CycloidNet& a, const CycloidNet& b, int anchor) {
  const int T = a.transition_count();
  std::vector<int> map(T, -1);
  std::vector<char> used(T, 0);
  std::vector<int> stack;
  map[0] = anchor;
  used[anchor] = 1;
  stack.push_back(0);
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    int u = map[t];
    const int pair_a[4] = {a.fw_next(t), a.bw_next(t), a.fw_prev(t), a.bw_prev(t)};
    const int pair_b[4] = {b.fw_next(u), b.bw_next(u), b.fw_prev(u), b.bw_prev(u)};
    for (int k = 0; k < 4; ++k) {
      int ta = pair_a[k], tb = pair_b[k];
      if (map[ta] == -1) {
        if (used[tb]) return {};
        map[ta] = tb;
        used[tb] = 1;
        stack.push_back(ta);
      } else if (map[ta] != tb) {
        return {};
      }
    }
  }
  for (int t = 0; t < T; ++t)
    if (map[t] < 0) return {};
  return map;
}

IsoWitness witness_from_map(const CycloidNet& a, const CycloidNet& b, std::vector<int> tmap) {
  IsoWitness w;
  w.forward_places.resize(a.forward_count());
  w.backward_places.resize(a.backward_count());
  for (int i = 0; i < a.forward_count(); ++i)
    w.forward_places[i] = b.fw_out(tmap[a.forward_arcs[i].from]);
  for (int i = 0; i < a.backward_count(); ++i)
    w.backward_places[i] = b.bw_out(tmap[a.backward_arcs[i].from]);
  w.transitions = std::move(tmap);
  return w;
}

bool shapes_match(const CycloidNet& a, const CycloidNet& b) {
  return a.transition_count() == b.transition_count() &&
         a.forward_count() == b.forward_count() && a.backward_count() == b.backward_count() &&
         a.transition_count() > 0;
}

}  // namespace

long long shortest_cycle_serial(const CycloidNet& net) {
  require_well_formed(net);
  long long best = LLONG_MAX;
  for (int t = 0; t < net.transition_count(); ++t)
    best = std::min(best, cycle_through(net, t, best));
  return best;
}

long long shortest_cycle(const CycloidNet& net) {
  require_well_formed(net);
  long long best = LLONG_MAX;
  const int T = net.transition_count();
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (int t = 0; t < T; ++t) best = std::min(best, cycle_through(net, t, best));
  return best;
}

std::optional<IsoWitness> find_isomorphism_serial(const CycloidNet& a, const CycloidNet& b) {
  if (!shapes_match(a, b)) return std::nullopt;
  require_well_formed(a);
  require_well_formed(b);
  for (int anchor = 0; anchor < b.transition_count(); ++anchor) {
    std::vector<int> tmap = propagate(a, b, anchor);
    if (!tmap.empty()) return witness_from_map(a, b, std::move(tmap));
  }
  return std::nullopt;
}

std::optional<IsoWitness> find_isomorphism(const CycloidNet& a, const CycloidNet& b) {
  if (!shapes_match(a, b)) return std::nullopt;
  require_well_formed(a);
  require_well_formed(b);
  const int T = b.transition_count();
  int best = INT_MAX;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (int anchor = 0; anchor < T; ++anchor) {
    if (anchor > best) continue;
    if (!propagate(a, b, anchor).empty()) best = std::min(best, anchor);
  }
  if (best == INT_MAX) return std::nullopt;
  return witness_from_map(a, b, propagate(a, b, best));
}

bool witness_valid(const CycloidNet& a, const CycloidNet& b, const IsoWitness& w) {
  auto bijection = [](const std::vector<int>& m, int target_size) {
    if (static_cast<int>(m.size()) != target_size) return false;
    std::vector<char> hit(target_size, 0);
    for (int v : m) {
      if (v < 0 || v >= target_size || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  const int tf = w.swaps_types ? b.backward_count() : b.forward_count();
  const int tb = w.swaps_types ? b.forward_count() : b.backward_count();
  if (a.transition_count() != b.transition_count()) return false;
  if (!bijection(w.transitions, b.transition_count()) ||
      !bijection(w.forward_places, tf) || !bijection(w.backward_places, tb))
    return false;

  auto arcs_match = [&](const std::vector<PlaceArc>& src, const std::vector<int>& pmap,
                        const std::vector<PlaceArc>& dst) {
    for (size_t i = 0; i < src.size(); ++i) {
      const PlaceArc& img = dst[pmap[i]];
      if (img.from != w.transitions[src[i].from] || img.to != w.transitions[src[i].to])
        return false;
    }
    return true;
  };
  const std::vector<PlaceArc>& fw_dst = w.swaps_types ? b.backward_arcs : b.forward_arcs;
  const std::vector<PlaceArc>& bw_dst = w.swaps_types ? b.forward_arcs : b.backward_arcs;
  return arcs_match(a.forward_arcs, w.forward_places, fw_dst) &&
         arcs_match(a.backward_arcs, w.backward_places, bw_dst);
}

IsoWitness compose_witness(const IsoWitness& ab, const IsoWitness& bc) {
  IsoWitness w;
  w.swaps_types = ab.swaps_types != bc.swaps_types;
  w.transitions.resize(ab.transitions.size());
  for (size_t i = 0; i < ab.transitions.size(); ++i)
    w.transitions[i] = bc.transitions[ab.transitions[i]];
  const std::vector<int>& mid_fw = ab.swaps_types ? bc.backward_places : bc.forward_places;
  const std::vector<int>& mid_bw = ab.swaps_types ? bc.forward_places : bc.backward_places;
  w.forward_places.resize(ab.forward_places.size());
  for (size_t i = 0; i < ab.forward_places.size(); ++i)
    w.forward_places[i] = mid_fw[ab.forward_places[i]];
  w.backward_places.resize(ab.backward_places.size());
  for (size_t i = 0; i < ab.backward_places.size(); ++i)
    w.backward_places[i] = mid_bw[ab.backward_places[i]];
  return w;
}

}  // namespace cycloid
