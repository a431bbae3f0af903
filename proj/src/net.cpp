#include "cycloid/net.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace cycloid {

namespace {
constexpr long long kMaxGeneratedArea = 2'000'000;

std::string coord_name(char kind, Point p) {
  return std::string(1, kind) + ":" + std::to_string(p.xi) + "," + std::to_string(p.eta);
}
}  // namespace

int Marking::count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

int CycloidNet::link(const std::vector<int>& v, int t, const char* what) const {
  if (t < 0 || t >= transition_count())
    throw std::out_of_range("unknown transition index " + std::to_string(t));
  int p = v[t];
  if (p < 0)
    throw net_error("malformed net: transition '" + transition_names[t] + "' has no " + what);
  return p;
}

void CycloidNet::finalize() {
  issues_.clear();
  const int T = transition_count();
  t_fw_out_.assign(T, -1);
  t_fw_in_.assign(T, -1);
  t_bw_out_.assign(T, -1);
  t_bw_in_.assign(T, -1);

  auto wire = [&](const std::vector<PlaceArc>& arcs, const std::vector<std::string>& names,
                  std::vector<int>& out, std::vector<int>& in, const char* kind) {
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      const PlaceArc& a = arcs[i];
      if (a.from < 0 || a.from >= T || a.to < 0 || a.to >= T) {
        issues_.push_back(std::string(kind) + " place '" + names[i] +
                          "' is not connected to one producer and one consumer");
        continue;
      }
      if (out[a.from] != -1)
        issues_.push_back("transition '" + transition_names[a.from] + "' has more than one " +
                          kind + " output place");
      else
        out[a.from] = i;
      if (in[a.to] != -1)
        issues_.push_back("transition '" + transition_names[a.to] + "' has more than one " +
                          kind + " input place");
      else
        in[a.to] = i;
    }
  };
  wire(forward_arcs, forward_names, t_fw_out_, t_fw_in_, "forward");
  wire(backward_arcs, backward_names, t_bw_out_, t_bw_in_, "backward");

  for (int t = 0; t < T; ++t) {
    if (t_fw_out_[t] < 0) issues_.push_back("transition '" + transition_names[t] + "' has no forward output place");
    if (t_fw_in_[t] < 0) issues_.push_back("transition '" + transition_names[t] + "' has no forward input place");
    if (t_bw_out_[t] < 0) issues_.push_back("transition '" + transition_names[t] + "' has no backward output place");
    if (t_bw_in_[t] < 0) issues_.push_back("transition '" + transition_names[t] + "' has no backward input place");
  }
}

int CycloidNet::transition_index(const std::string& name) const {
  for (int i = 0; i < transition_count(); ++i)
    if (transition_names[i] == name) return i;
  return -1;
}

int CycloidNet::transition_at(Point p) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), p);
  if (it == coords.end() || *it != p) return -1;
  return static_cast<int>(it - coords.begin());
}

CycloidNet generate_net(const CycloidParams& c) {
  if (c.area() > kMaxGeneratedArea)
    throw std::overflow_error("cycloid area " + std::to_string(c.area()) +
                              " is too large to materialize as a net");
  CycloidNet net;
  net.params = c;

  // Parallelogram transitions are exactly the rho-fixed points of the
  // bounding box 0 <= xi <= alpha+gamma, -beta <= eta <= delta. The xi-major
  // scan keeps coords sorted, which transition_at relies on.
  for (long long xi = 0; xi <= c.alpha() + c.gamma(); ++xi)
    for (long long eta = -c.beta(); eta <= c.delta(); ++eta) {
      Point p{xi, eta};
      if (rho(c, p) == p) net.coords.push_back(p);
    }
  if (static_cast<long long>(net.coords.size()) != c.area())
    throw std::logic_error("parallelogram enumeration does not match the area");

  const int T = static_cast<int>(net.coords.size());
  net.transition_names.reserve(T);
  net.forward_names.reserve(T);
  net.backward_names.reserve(T);
  for (Point p : net.coords) {
    net.transition_names.push_back(coord_name('t', p));
    net.forward_names.push_back(coord_name('f', p));
    net.backward_names.push_back(coord_name('b', p));
  }
  for (int i = 0; i < T; ++i) {
    Point p = net.coords[i];
    net.forward_arcs.push_back({i, net.transition_at(rho(c, {p.xi + 1, p.eta}))});
    net.backward_arcs.push_back({i, net.transition_at(rho(c, {p.xi, p.eta + 1}))});
  }
  net.finalize();
  return net;
}

Marking standard_marking(const CycloidParams& c, const CycloidNet& net) {
  if (!net.params || *net.params != c)
    throw std::invalid_argument("net was not generated from the given parameters");
  Marking m(net.place_count());
  // The marked forward place of column eta sits at xi = floor(-alpha*eta/beta);
  // shifting eta by beta lands in the same class, so one period covers all
  // marking classes. Dually for backward places with xi in [0, alpha).
  for (long long eta = 0; eta < c.beta(); ++eta) {
    Point grid{floor_div(-c.alpha() * eta, c.beta()), eta};
    int owner = net.transition_at(rho(c, grid));
    m.set(net.global_forward(net.fw_out(owner)));
  }
  for (long long xi = 0; xi < c.alpha(); ++xi) {
    Point grid{xi, floor_div(-c.beta() * xi, c.alpha())};
    int owner = net.transition_at(rho(c, grid));
    m.set(net.global_backward(net.bw_out(owner)));
  }
  return m;
}

bool enabled(const CycloidNet& net, const Marking& m, int t) {
  return m.test(net.global_forward(net.fw_in(t))) && m.test(net.global_backward(net.bw_in(t)));
}

Marking fire(const CycloidNet& net, const Marking& m, int t) {
  if (!enabled(net, m, t))
    throw std::invalid_argument("transition '" + net.transition_names[t] +
                                "' is not enabled in the given marking");
  Marking next = m;
  next.reset(net.global_forward(net.fw_in(t)));
  next.reset(net.global_backward(net.bw_in(t)));
  next.set(net.global_forward(net.fw_out(t)));
  next.set(net.global_backward(net.bw_out(t)));
  return next;
}

namespace {

// Explicit-state engine for nets with at most 128 places: markings are two
// machine words, the visited set is an open-addressing table, and firing is
// pure mask arithmetic. Nets this size dominate the exploration sweeps.
struct Word2 {
  uint64_t a = 0, b = 0;
  bool operator==(const Word2&) const = default;
};

// Open-addressing set of markings with at most 120 bits: the top bits of the
// second word hold the slot state, so a slot is one 16-byte value and an
// all-zero slot means empty (stored states are never zero). Slots are indexed
// by the high bits of the hash, which keeps probe order stable across growth.
class Word2Set {
 public:
  static constexpr uint64_t kSeen = uint64_t{1} << 62;
  static constexpr uint64_t kBack = uint64_t{2} << 62;
  static constexpr uint64_t kStateMask = uint64_t{3} << 62;
  static constexpr size_t npos = static_cast<size_t>(-1);

  explicit Word2Set(size_t hint) {
    log2_ = 10;
    while ((size_t{1} << log2_) < hint * 2) ++log2_;
    slots_.assign(size_t{1} << log2_, Word2{});
  }

  size_t size() const { return size_; }

  static uint64_t hash(Word2 k) {
    uint64_t h = (k.a ^ (k.b * 0x9e3779b97f4a7c15ull)) * 0xff51afd7ed558ccdull;
    return h ^ (h >> 33);
  }

  const Word2* data() const { return slots_.data(); }
  size_t first_slot(uint64_t h) const { return h >> (64 - log2_); }

  bool is_back(size_t slot) const { return (slots_[slot].b & kStateMask) == kBack; }
  void mark_back(size_t slot) { slots_[slot].b = (slots_[slot].b & ~kStateMask) | kBack; }
  Word2 key(size_t slot) const { return {slots_[slot].a, slots_[slot].b & ~kStateMask}; }

  // Inserts the key (state kSeen) unless present.
  bool insert(Word2 k, uint64_t h) {
    if (size_ * 2 >= slots_.size()) grow();
    size_t slot = locate(k, h);
    if (slots_[slot].b & kStateMask) return false;
    slots_[slot] = {k.a, k.b | kSeen};
    ++size_;
    return true;
  }

  size_t find(Word2 k, uint64_t h) const {
    size_t slot = locate(k, h);
    return (slots_[slot].b & kStateMask) ? slot : npos;
  }

 private:
  size_t locate(Word2 k, uint64_t h) const {
    const size_t mask = slots_.size() - 1;
    size_t slot = h >> (64 - log2_);
    while (true) {
      const Word2& s = slots_[slot];
      if (!(s.b & kStateMask)) return slot;
      if (s.a == k.a && (s.b & ~kStateMask) == k.b) return slot;
      slot = (slot + 1) & mask;
    }
  }

  void grow() {
    std::vector<Word2> old = std::move(slots_);
    ++log2_;
    slots_.assign(size_t{1} << log2_, Word2{});
    for (const Word2& s : old) {
      if (!(s.b & kStateMask)) continue;
      Word2 k{s.a, s.b & ~kStateMask};
      slots_[locate(k, hash(k))] = s;
    }
  }

  std::vector<Word2> slots_;
  unsigned log2_ = 10;
  size_t size_ = 0;
};

ExploreResult explore_packed(const CycloidNet& net, const Marking& m0, long long max_states) {
  const int T = net.transition_count();
  const int F = net.forward_count();
  ExploreResult res;
  res.safe = true;
  res.complete = true;

  struct TransMask {
    uint64_t ia = 0, ib = 0, oa = 0, ob = 0;
  };
  std::vector<TransMask> masks(T);
  for (int t = 0; t < T; ++t) {
    auto bit = [](uint64_t& lo, uint64_t& hi, int p) {
      (p < 64 ? lo : hi) |= uint64_t{1} << (p & 63);
    };
    bit(masks[t].ia, masks[t].ib, net.global_forward(net.fw_in(t)));
    bit(masks[t].ia, masks[t].ib, net.global_backward(net.bw_in(t)));
    bit(masks[t].oa, masks[t].ob, net.global_forward(net.fw_out(t)));
    bit(masks[t].oa, masks[t].ob, net.global_backward(net.bw_out(t)));
  }

  // Enabled transitions are exactly the consumers of marked forward places
  // whose backward input is marked too, so the scan walks the (few) forward
  // tokens instead of all T transitions. Predecessor candidates dually are
  // the producers of marked forward places.
  Word2 fw_region;
  for (int p = 0; p < F; ++p) (p < 64 ? fw_region.a : fw_region.b) |= uint64_t{1} << (p & 63);
  std::vector<int> consumer(F), producer(F);
  for (int p = 0; p < F; ++p) {
    consumer[p] = net.forward_arcs[p].to;
    producer[p] = net.forward_arcs[p].from;
  }

  Word2 start;
  start.a = m0.words()[0];
  if (m0.words().size() > 1) start.b = m0.words()[1];

  Word2Set table(1 << 12);
  std::vector<Word2> frontier;
  std::vector<char> fired(T, 0);
  table.insert(start, Word2Set::hash(start));
  frontier.push_back(start);

  // Successor probes are the hot path; batching them per state lets the
  // prefetches overlap the cache misses.
  std::vector<Word2> batch(64 * (T + 1));
  std::vector<uint64_t> hashes(64 * (T + 1));

  auto for_each_marked_forward = [&](Word2 m, auto&& fn) {
    uint64_t wa = m.a & fw_region.a;
    while (wa) {
      fn(static_cast<int>(std::countr_zero(wa)));
      wa &= wa - 1;
    }
    uint64_t wb = m.b & fw_region.b;
    while (wb) {
      fn(64 + static_cast<int>(std::countr_zero(wb)));
      wb &= wb - 1;
    }
  };

  // States are expanded in chunks so that dozens of table prefetches are in
  // flight before the matching probes run; the walk is latency-bound.
  constexpr int kChunk = 64;
  std::vector<Word2> popped(kChunk);
  while (!frontier.empty()) {
    int k = static_cast<int>(std::min<size_t>(kChunk, frontier.size()));
    for (int i = 0; i < k; ++i) {
      popped[i] = frontier.back();
      frontier.pop_back();
    }
    int n = 0;
    for (int i = 0; i < k; ++i) {
      const Word2 m = popped[i];
      for_each_marked_forward(m, [&](int p) {
        int t = consumer[p];
        const TransMask& tm = masks[t];
        if ((m.a & tm.ia) != tm.ia || (m.b & tm.ib) != tm.ib) return;
        fired[t] = 1;
        Word2 rest{m.a & ~tm.ia, m.b & ~tm.ib};
        if ((rest.a & tm.oa) | (rest.b & tm.ob)) res.safe = false;
        Word2 next{rest.a | tm.oa, rest.b | tm.ob};
        uint64_t h = Word2Set::hash(next);
        __builtin_prefetch(table.data() + table.first_slot(h));
        batch[n] = next;
        hashes[n] = h;
        ++n;
      });
    }
    for (int i = 0; i < n; ++i) {
      if (!table.insert(batch[i], hashes[i])) continue;
      if (static_cast<long long>(table.size()) > max_states) {
        res.complete = false;
        res.states = static_cast<long long>(table.size());
        return res;
      }
      frontier.push_back(batch[i]);
    }
  }
  res.states = static_cast<long long>(table.size());

  // Liveness: every state reaches the start again (single strongly connected
  // component) and every transition fires somewhere. A predecessor under t
  // exists when t's outputs are marked and no input is marked besides them.
  std::vector<Word2> back{start};
  table.mark_back(table.find(start, Word2Set::hash(start)));
  size_t reached = 1;
  while (!back.empty()) {
    int k = static_cast<int>(std::min<size_t>(kChunk, back.size()));
    for (int i = 0; i < k; ++i) {
      popped[i] = back.back();
      back.pop_back();
    }
    int n = 0;
    for (int i = 0; i < k; ++i) {
      const Word2 m = popped[i];
      for_each_marked_forward(m, [&](int p) {
        int t = producer[p];
        const TransMask& tm = masks[t];
        if ((m.a & tm.oa) != tm.oa || (m.b & tm.ob) != tm.ob) return;
        Word2 stripped{m.a & ~tm.oa, m.b & ~tm.ob};
        if ((stripped.a & tm.ia) | (stripped.b & tm.ib)) return;
        Word2 prev{stripped.a | tm.ia, stripped.b | tm.ib};
        uint64_t h = Word2Set::hash(prev);
        __builtin_prefetch(table.data() + table.first_slot(h));
        batch[n] = prev;
        hashes[n] = h;
        ++n;
      });
    }
    for (int i = 0; i < n; ++i) {
      size_t slot = table.find(batch[i], hashes[i]);
      if (slot == Word2Set::npos || table.is_back(slot)) continue;
      table.mark_back(slot);
      ++reached;
      back.push_back(batch[i]);
    }
  }
  bool all_fired = std::all_of(fired.begin(), fired.end(), [](char f) { return f != 0; });
  res.live = all_fired && reached == table.size();
  return res;
}

ExploreResult explore_general(const CycloidNet& net, const Marking& m0, long long max_states) {
  const int T = net.transition_count();
  ExploreResult res;
  res.safe = true;
  res.complete = true;

  std::unordered_set<Marking, MarkingHash> seen;
  std::deque<Marking> frontier;
  std::vector<char> fired(T, 0);
  seen.insert(m0);
  frontier.push_back(m0);

  while (!frontier.empty()) {
    Marking m = frontier.front();
    frontier.pop_front();
    for (int t = 0; t < T; ++t) {
      if (!enabled(net, m, t)) continue;
      int fi = net.global_forward(net.fw_in(t)), bi = net.global_backward(net.bw_in(t));
      int fo = net.global_forward(net.fw_out(t)), bo = net.global_backward(net.bw_out(t));
      // Token collision test: an output place that is still marked after the
      // inputs are consumed would receive a second token.
      if ((m.test(fo) && fo != fi && fo != bi) || (m.test(bo) && bo != fi && bo != bi))
        res.safe = false;
      fired[t] = 1;
      Marking next = fire(net, m, t);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > max_states) {
          res.complete = false;
          res.states = static_cast<long long>(seen.size());
          return res;
        }
        frontier.push_back(next);
      }
    }
  }
  res.states = static_cast<long long>(seen.size());

  std::unordered_set<Marking, MarkingHash> reaches_m0;
  reaches_m0.insert(m0);
  frontier.push_back(m0);
  while (!frontier.empty()) {
    Marking m = frontier.front();
    frontier.pop_front();
    for (int t = 0; t < T; ++t) {
      int fi = net.global_forward(net.fw_in(t)), bi = net.global_backward(net.bw_in(t));
      int fo = net.global_forward(net.fw_out(t)), bo = net.global_backward(net.bw_out(t));
      if (!m.test(fo) || !m.test(bo)) continue;
      Marking prev = m;
      prev.reset(fo);
      prev.reset(bo);
      prev.set(fi);
      prev.set(bi);
      if (!enabled(net, prev, t) || !(fire(net, prev, t) == m)) continue;
      if (!seen.contains(prev)) continue;
      if (reaches_m0.insert(prev).second) frontier.push_back(prev);
    }
  }
  bool all_fired = std::all_of(fired.begin(), fired.end(), [](char f) { return f != 0; });
  res.live = all_fired && reaches_m0.size() == seen.size();
  return res;
}

}  // namespace

ExploreResult explore(const CycloidNet& net, const Marking& m0, long long max_states) {
  for (int t = 0; t < net.transition_count(); ++t) {
    net.fw_in(t);
    net.bw_in(t);
    net.fw_out(t);
    net.bw_out(t);
  }
  if (net.place_count() <= 120) return explore_packed(net, m0, max_states);
  return explore_general(net, m0, max_states);
}

bool strongly_connected(const CycloidNet& net) {
  const int T = net.transition_count();
  if (T == 0) return false;
  auto sweep = [&](bool forward) {
    std::vector<char> vis(T, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int n = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      int next[2] = {forward ? net.fw_next(t) : net.fw_prev(t),
                     forward ? net.bw_next(t) : net.bw_prev(t)};
      for (int u : next)
        if (!vis[u]) {
          vis[u] = 1;
          ++n;
          stack.push_back(u);
        }
    }
    return n == T;
  };
  return sweep(true) && sweep(false);
}

}  // namespace cycloid
