#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloid/algebra.hpp"
#include "cycloid/errors.hpp"
#include "cycloid/params.hpp"

namespace cycloid {

/// A set of marked places, indexed by global place index
/// (forward places first, then backward places).
class Marking {
 public:
  Marking() = default;
  explicit Marking(int nplaces) : size_(nplaces), words_((nplaces + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int p) const { return (words_[p >> 6] >> (p & 63)) & 1; }
  void set(int p) { words_[p >> 6] |= uint64_t{1} << (p & 63); }
  void reset(int p) { words_[p >> 6] &= ~(uint64_t{1} << (p & 63)); }
  int count() const;

  bool operator==(const Marking&) const = default;
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : m.words()) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// One place of a marked graph: produced by `from`, consumed by `to`
/// (transition indices).
struct PlaceArc {
  int from = -1;
  int to = -1;
};

/// A finite typed marked graph: transitions plus forward and backward places,
/// each place with exactly one producer and one consumer transition. Nets
/// generated from parameters carry the parallelogram coordinate of every
/// transition; loaded nets may not. The structure is not enforced during
/// construction: call finalize() once the arrays are filled, then inspect
/// issues()/well_formed(). Navigation accessors throw net_error when the
/// requested link is absent.
class CycloidNet {
 public:
  std::optional<CycloidParams> params;
  std::vector<std::string> transition_names;
  std::vector<std::string> forward_names;
  std::vector<std::string> backward_names;
  std::vector<PlaceArc> forward_arcs;   // parallel to forward_names
  std::vector<PlaceArc> backward_arcs;  // parallel to backward_names
  std::vector<Point> coords;            // per transition; empty for loaded nets
  std::optional<Marking> initial_marking;

  void finalize();

  int transition_count() const { return static_cast<int>(transition_names.size()); }
  int forward_count() const { return static_cast<int>(forward_names.size()); }
  int backward_count() const { return static_cast<int>(backward_names.size()); }
  int place_count() const { return forward_count() + backward_count(); }

  bool well_formed() const { return issues_.empty(); }
  const std::vector<std::string>& issues() const { return issues_; }

  // Incident places of a transition (local place index).
  int fw_out(int t) const { return link(t_fw_out_, t, "forward output place"); }
  int fw_in(int t) const { return link(t_fw_in_, t, "forward input place"); }
  int bw_out(int t) const { return link(t_bw_out_, t, "backward output place"); }
  int bw_in(int t) const { return link(t_bw_in_, t, "backward input place"); }

  // Neighbour transitions along the four path directions.
  int fw_next(int t) const { return forward_arcs[fw_out(t)].to; }
  int fw_prev(int t) const { return forward_arcs[fw_in(t)].from; }
  int bw_next(int t) const { return backward_arcs[bw_out(t)].to; }
  int bw_prev(int t) const { return backward_arcs[bw_in(t)].from; }

  // Global place indices (forward block first).
  int global_forward(int f) const { return f; }
  int global_backward(int b) const { return forward_count() + b; }
  std::string place_name(int global) const {
    return global < forward_count() ? forward_names[global]
                                    : backward_names[global - forward_count()];
  }

  int transition_index(const std::string& name) const;
  int transition_at(Point p) const;  // -1 when the net has no coordinates

 private:
  int link(const std::vector<int>& v, int t, const char* what) const;

  std::vector<int> t_fw_out_, t_fw_in_, t_bw_out_, t_bw_in_;
  std::vector<std::string> issues_;
};

/// Builds the net of the cycloid: one transition per parallelogram point,
/// one forward and one backward place owned by each transition.
CycloidNet generate_net(const CycloidParams& c);

/// The standard initial marking: beta forward and alpha backward tokens.
Marking standard_marking(const CycloidParams& c, const CycloidNet& net);

bool enabled(const CycloidNet& net, const Marking& m, int t);
Marking fire(const CycloidNet& net, const Marking& m, int t);

struct ExploreResult {
  long long states = 0;
  bool safe = false;
  bool live = false;
  bool complete = false;  // false when the state budget was exhausted
};

/// Breadth-first reachability from m0. safe: no firing ever produces a token
/// on an already marked place. live: the reachability graph is one strongly
/// connected component and every transition fires on some edge.
ExploreResult explore(const CycloidNet& net, const Marking& m0, long long max_states);

/// True iff every transition reaches and is reached by every other one.
bool strongly_connected(const CycloidNet& net);

}  // namespace cycloid
