#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycloid/net.hpp"
#include "cycloid/oracle.hpp"
#include "cycloid/params.hpp"

namespace cycloid {

enum class PathKind { Forward, ForwardReversed, Backward, BackwardReversed };

/// Lazy cyclic transition sequence: element 0 is the base, every further
/// element follows the successor rule of the kind.
struct Path {
  const CycloidNet* net = nullptr;
  int base = -1;
  PathKind kind = PathKind::Forward;
};

Path path(const CycloidNet& net, int base, PathKind kind);
int path_at(const Path& p, long long n);
int path_step(const CycloidNet& net, int t, PathKind kind);

/// Intersection of two paths launched from one base: the first transition
/// both paths reach, by total walked length q + r (ties toward the shorter
/// second walk). q and r are the positive indices of the cut on path1 and
/// path2; string1/string2 exclude the base and include the cut.
struct CutResult {
  int cut = -1;
  long long q = 0;
  long long r = 0;
  std::vector<int> string1, string2;
};

CutResult cut(const CycloidNet& net, int base, PathKind kind1, PathKind kind2);

/// Base transition used when none is given: index 0, which is the smallest
/// coordinate in (xi, eta) order for generated nets and the first listed
/// transition for loaded ones.
int default_base(const CycloidNet& net);

/// Parameters of the beta-delta-irreducible cycloid generating the net:
/// alpha and beta read off cut(fw, bw), gamma completed from the area.
CycloidParams recover_bd_irreducible(const CycloidNet& net);

struct BdRecovery {
  CycloidParams params;
  CutResult cut;
  int base;
};
BdRecovery recover_bd_detail(const CycloidNet& net, int base);

/// The whole reduction chain read off the net: anchor transitions t_1..t_u
/// labelled with cycloid parameters, consecutive labels one alpha/gamma
/// reduction step apart, the last label with alpha == gamma. cut_lengths[k]
/// holds the (q, r) pair that produced label k+1.
struct ChainRecovery {
  std::vector<int> anchors;
  std::vector<CycloidParams> labels;
  std::vector<std::pair<long long, long long>> cut_lengths;
};
ChainRecovery recover_chain(const CycloidNet& net);

/// The alpha source (tau0) and beta source (tau_a) of a marked cycloid
/// system. Counting marked and active transitions yields these only when
/// alpha > beta; counting backward and forward tokens (the typed variant,
/// always available on a cycloid net) yields them for every quadruple.
struct SynthesisObservables {
  long long tau0 = 0;
  long long tau_a = 0;
  long long area = 0;
  long long cyc = 0;
};

SynthesisObservables measure_observables(const CycloidNet& net, const Marking& m0);

/// All parameter quadruples sigma-equivalent to the observables, smallest
/// gamma+delta first. Consecutive candidates differ by one shear step, so
/// they are mutually cycloid-isomorphic. Requires tau0 != tau_a.
std::vector<CycloidParams> lbc_synthesize(const SynthesisObservables& obs);

/// gamma and delta of a weakly irreducible lbc cycloid from (alpha, beta,
/// area, cyc); exact integer solutions or std::invalid_argument.
std::pair<long long, long long> weakly_irreducible_synthesize(long long alpha, long long beta,
                                                              long long area, long long cyc);

/// gamma for the strongly irreducible case beta == delta: A / beta - alpha.
long long strongly_irreducible_gamma(long long alpha, long long beta, long long area);

struct VerifyResult {
  bool ok = false;
  std::optional<CycloidParams> params;
  std::optional<IsoWitness> witness;
  std::string failure;  // "structure: ...", "connectivity: ...", "synthesis: ...", "isomorphism: ..."
};

/// Decides whether the net is the net of some cycloid: recover parameters,
/// regenerate, and search for a type-preserving isomorphism.
VerifyResult verify_cycloid_net(const CycloidNet& net);

/// Checks the cut-length laws relating a net to its true parameters at every
/// base transition. Requires alpha != gamma.
bool alpha_gamma_cut_laws_check(const CycloidNet& net, const CycloidParams& c);

}  // namespace cycloid
