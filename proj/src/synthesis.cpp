#include "cycloid/synthesis.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cycloid {

Path path(const CycloidNet& net, int base, PathKind kind) {
  if (base < 0 || base >= net.transition_count())
    throw std::out_of_range("path base is not a transition of the net");
  return {&net, base, kind};
}

int path_step(const CycloidNet& net, int t, PathKind kind) {
  switch (kind) {
    case PathKind::Forward: return net.fw_next(t);
    case PathKind::ForwardReversed: return net.fw_prev(t);
    case PathKind::Backward: return net.bw_next(t);
    case PathKind::BackwardReversed: return net.bw_prev(t);
  }
  throw std::logic_error("unreachable");
}

int path_at(const Path& p, long long n) {
  if (n < 0) throw std::invalid_argument("path index must be nonnegative");
  int t = p.base;
  for (long long k = 0; k < n; ++k) t = path_step(*p.net, t, p.kind);
  return t;
}

namespace {

// One full period of a path, base excluded: elements at indices 1..period-1
// plus the first-occurrence index of each.
struct PathTrace {
  std::vector<int> seq;
  std::unordered_map<int, long long> pos;
};

PathTrace trace_period(const CycloidNet& net, int base, PathKind kind) {
  PathTrace tr;
  const long long bound = net.transition_count();
  int t = base;
  long long idx = 0;
  do {
    t = path_step(net, t, kind);
    ++idx;
    if (idx > bound)
      throw net_error("path did not return to its base within one period; not a cycloid net");
    if (t != base) {
      tr.seq.push_back(t);
      tr.pos.emplace(t, idx);
    }
  } while (t != base);
  return tr;
}

}  // namespace

CutResult cut(const CycloidNet& net, int base, PathKind kind1, PathKind kind2) {
  if (kind1 == kind2) throw std::invalid_argument("cut requires two different paths");
  if (base < 0 || base >= net.transition_count())
    throw std::out_of_range("cut base is not a transition of the net");

  PathTrace p1 = trace_period(net, base, kind1);
  PathTrace p2 = trace_period(net, base, kind2);

  // The meeting point reached with the least total walking, ties resolved
  // toward the shorter second string.
  CutResult res;
  long long best_sum = -1;
  for (const auto& [t, q] : p1.pos) {
    auto it = p2.pos.find(t);
    if (it == p2.pos.end()) continue;
    long long sum = q + it->second;
    if (best_sum < 0 || sum < best_sum || (sum == best_sum && it->second < res.r)) {
      best_sum = sum;
      res.cut = t;
      res.q = q;
      res.r = it->second;
    }
  }
  if (best_sum < 0) throw net_error("the two paths only meet in their base; not a cycloid net");
  res.string1.assign(p1.seq.begin(), p1.seq.begin() + res.q);
  res.string2.assign(p2.seq.begin(), p2.seq.begin() + res.r);
  return res;
}

int default_base(const CycloidNet& net) {
  if (net.transition_count() == 0) throw net_error("net has no transitions");
  return 0;
}

BdRecovery recover_bd_detail(const CycloidNet& net, int base) {
  // Walk the backward path until it first meets the forward cycle through the
  // base: that meeting index is beta (= delta), its forward index is alpha.
  PathTrace fw = trace_period(net, base, PathKind::Forward);
  CutResult cr;
  {
    int t = base;
    const long long bound = net.transition_count();
    for (long long r = 1; r <= bound; ++r) {
      t = path_step(net, t, PathKind::Backward);
      if (t == base)
        throw net_error("the backward path returned to its base before meeting the forward "
                        "cycle; not a cycloid net");
      cr.string2.push_back(t);
      auto it = fw.pos.find(t);
      if (it != fw.pos.end()) {
        cr.cut = t;
        cr.q = it->second;
        cr.r = r;
        break;
      }
    }
    if (cr.cut < 0)
      throw net_error("the backward path never meets the forward cycle; not a cycloid net");
    cr.string1.assign(fw.seq.begin(), fw.seq.begin() + cr.q);
  }

  long long area = net.transition_count();
  long long alpha = cr.q;
  long long beta = cr.r;
  if (area % beta != 0 || area / beta <= alpha)
    throw net_error("cut lengths are inconsistent with the transition count; not a cycloid net");
  long long gamma = area / beta - alpha;
  return {CycloidParams{alpha, beta, gamma, beta}, std::move(cr), base};
}

CycloidParams recover_bd_irreducible(const CycloidNet& net) {
  return recover_bd_detail(net, default_base(net)).params;
}

namespace {

// The crossing stated by the cut laws for the current label: q = |alpha-gamma|
// forward steps and r = beta+delta steps along the second path land on the
// same transition, and no shorter second walk reaches that transition.
int directed_meet(const CycloidNet& net, int anchor, long long q, PathKind second, long long r) {
  int meet = anchor;
  for (long long k = 0; k < q; ++k) meet = path_step(net, meet, PathKind::Forward);
  int t = anchor;
  for (long long k = 1; k < r; ++k) {
    t = path_step(net, t, second);
    if (t == meet)
      throw net_error("paths meet earlier than the cut laws allow; not a cycloid net");
  }
  if (path_step(net, t, second) != meet)
    throw net_error("forward and backward walks do not meet where the cut laws require; "
                    "not a cycloid net");
  return meet;
}

}  // namespace

ChainRecovery recover_chain(const CycloidNet& net) {
  BdRecovery first = recover_bd_detail(net, default_base(net));
  ChainRecovery rec;
  rec.anchors.push_back(first.cut.cut);
  rec.labels.push_back(first.params);

  CycloidParams cur = first.params;
  int anchor = first.cut.cut;
  while (cur.alpha() != cur.gamma()) {
    long long r = checked_add(cur.beta(), cur.delta());
    long long q;
    PathKind second;
    CycloidParams next{1, 1, 1, 1};
    if (cur.alpha() > cur.gamma()) {
      q = cur.alpha() - cur.gamma();
      second = PathKind::Backward;
      next = CycloidParams{q, r, cur.gamma(), cur.delta()};
    } else {
      q = cur.gamma() - cur.alpha();
      second = PathKind::BackwardReversed;
      next = CycloidParams{cur.alpha(), cur.beta(), q, r};
    }
    anchor = directed_meet(net, anchor, q, second, r);
    rec.cut_lengths.emplace_back(q, r);
    rec.anchors.push_back(anchor);
    rec.labels.push_back(next);
    cur = next;
    if (static_cast<long long>(rec.labels.size()) > net.transition_count() + 2)
      throw net_error("reduction chain recovery did not terminate; not a cycloid net");
  }
  return rec;
}

SynthesisObservables measure_observables(const CycloidNet& net, const Marking& m0) {
  // Cycloid nets always carry the place typing, so the token counts per type
  // are read off directly. They equal the transition counts (marked, active)
  // when alpha > beta and, unlike those, keep the two parameter sources
  // apart when alpha < beta.
  SynthesisObservables obs;
  obs.area = net.transition_count();
  obs.cyc = shortest_cycle(net);
  for (int p = 0; p < net.backward_count(); ++p)
    obs.tau0 += m0.test(net.global_backward(p)) ? 1 : 0;
  for (int p = 0; p < net.forward_count(); ++p)
    obs.tau_a += m0.test(net.global_forward(p)) ? 1 : 0;
  return obs;
}

std::vector<CycloidParams> lbc_synthesize(const SynthesisObservables& obs) {
  const long long a = obs.tau0, b = obs.tau_a;
  if (a < 1 || b < 1) throw std::invalid_argument("observables require tau0, tau_a >= 1");
  if (a > obs.area || b > obs.area)
    throw std::invalid_argument("inconsistent observables: counts exceed the area");
  if (a == b)
    throw std::invalid_argument(
        "synthesis is unsupported for tau0 == tau_a (alpha' == beta' has no residue formula)");

  const long long den = a > b ? a - b : b - a;
  const long long modulus = a > b ? a : b;
  const long long num = checked_sub(checked_mul(std::max(a, b), obs.cyc), obs.area);
  if (num % den != 0)
    throw std::invalid_argument("inconsistent observables: residue formula has no integer value");
  const long long residue = num / den;
  if (residue < 0 || residue >= modulus)
    throw std::invalid_argument("inconsistent observables: residue outside [0, modulus)");

  std::vector<CycloidParams> out;
  for (long long x = residue == 0 ? modulus : residue;; x += modulus) {
    // x enumerates gamma' when alpha' > beta', delta' otherwise; the partner
    // parameter is completed from the area.
    long long partner_num = a > b ? checked_sub(obs.area, checked_mul(b, x))
                                  : checked_sub(obs.area, checked_mul(a, x));
    long long partner_den = a > b ? a : b;
    if (partner_num < partner_den) break;  // partner would drop below 1
    if (partner_num % partner_den != 0) break;
    long long partner = partner_num / partner_den;
    out.push_back(a > b ? CycloidParams{a, b, x, partner} : CycloidParams{a, b, partner, x});
  }
  if (out.empty())
    throw std::invalid_argument("inconsistent observables: no positive parameter completion");
  return out;
}

std::pair<long long, long long> weakly_irreducible_synthesize(long long alpha, long long beta,
                                                              long long area, long long cyc) {
  if (alpha == beta)
    throw std::invalid_argument("weak-irreducible synthesis requires alpha != beta");
  const long long den = alpha - beta;
  const long long gnum = checked_sub(checked_mul(alpha, cyc), area);
  const long long dnum = checked_sub(area, checked_mul(beta, cyc));
  if (gnum % den != 0 || dnum % den != 0)
    throw std::invalid_argument("preconditions violated: no exact integer solution");
  long long gamma = gnum / den, delta = dnum / den;
  if (gamma < 1 || delta < 1 || gamma + delta != cyc)
    throw std::invalid_argument("preconditions violated: solution is not a cycloid");
  return {gamma, delta};
}

long long strongly_irreducible_gamma(long long alpha, long long beta, long long area) {
  if (beta < 1 || area % beta != 0 || area / beta - alpha < 1)
    throw std::invalid_argument("inputs do not describe a strongly irreducible cycloid");
  return area / beta - alpha;
}

VerifyResult verify_cycloid_net(const CycloidNet& net) {
  VerifyResult res;
  if (net.transition_count() == 0 || net.forward_count() == 0 || net.backward_count() == 0) {
    res.failure = "typing: the net needs transitions, forward places and backward places";
    return res;
  }
  if (!net.well_formed()) {
    res.failure = "structure: " + net.issues().front();
    return res;
  }
  if (!strongly_connected(net)) {
    res.failure = "connectivity: the net is not strongly connected";
    return res;
  }
  CycloidParams params{1, 1, 1, 1};
  try {
    params = recover_bd_irreducible(net);
  } catch (const net_error& e) {
    res.failure = std::string("synthesis: ") + e.what();
    return res;
  }
  CycloidNet regen = generate_net(params);
  std::optional<IsoWitness> w = find_isomorphism(net, regen);
  if (!w) {
    res.failure = "isomorphism: the net is not isomorphic to " + params.str();
    return res;
  }
  res.ok = true;
  res.params = params;
  res.witness = std::move(w);
  return res;
}

bool alpha_gamma_cut_laws_check(const CycloidNet& net, const CycloidParams& c) {
  if (c.alpha() == c.gamma())
    throw std::invalid_argument("cut laws are stated for alpha != gamma only");
  const long long q = c.alpha() > c.gamma() ? c.alpha() - c.gamma() : c.gamma() - c.alpha();
  const long long r = c.beta() + c.delta();
  const PathKind second =
      c.alpha() > c.gamma() ? PathKind::Backward : PathKind::BackwardReversed;
  try {
    for (int t = 0; t < net.transition_count(); ++t) directed_meet(net, t, q, second, r);
  } catch (const net_error&) {
    return false;
  }
  return true;
}

}  // namespace cycloid
