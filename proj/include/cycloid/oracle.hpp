#pragma once

#include <optional>
#include <vector>

#include "cycloid/net.hpp"

namespace cycloid {

/// Length (in transitions) of the shortest directed cycle of the net,
/// found by breadth-first search from every start transition. Independent of
/// any closed-form cycle formula. The plain entry point runs the starts in
/// parallel when OpenMP is enabled; the _serial variant is the reference.
long long shortest_cycle(const CycloidNet& net);
long long shortest_cycle_serial(const CycloidNet& net);

/// A node bijection between two nets, as index maps from the first net into
/// the second. When swaps_types is set the place maps point into the place
/// array of the opposite type (forward_places[i] indexes a backward place of
/// the target net and vice versa); such a witness can be a net isomorphism
/// but never a cycloid isomorphism.
struct IsoWitness {
  std::vector<int> transitions;
  std::vector<int> forward_places;
  std::vector<int> backward_places;
  bool swaps_types = false;
};

/// Exhaustive type-preserving isomorphism check. Fixing the image of one
/// transition determines the whole map (places have unique producers and
/// consumers), so all |T| anchor images are tried; the witness for the
/// smallest anchor wins, which keeps the parallel and serial versions
/// bit-identical.
std::optional<IsoWitness> find_isomorphism(const CycloidNet& a, const CycloidNet& b);
std::optional<IsoWitness> find_isomorphism_serial(const CycloidNet& a, const CycloidNet& b);

/// Mechanical check of the witness: per-kind bijections and flow edges
/// preserved in both directions, honouring swaps_types.
bool witness_valid(const CycloidNet& a, const CycloidNet& b, const IsoWitness& w);

/// Composition a->b->c of witnesses.
IsoWitness compose_witness(const IsoWitness& ab, const IsoWitness& bc);

}  // namespace cycloid
