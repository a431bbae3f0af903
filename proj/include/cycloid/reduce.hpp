#pragma once

#include <span>
#include <string>
#include <vector>

#include "cycloid/net.hpp"
#include "cycloid/oracle.hpp"
#include "cycloid/params.hpp"

namespace cycloid {

enum class Rule { Alpha, Beta, Gamma, Delta };

const char* rule_name(Rule r);
char rule_letter(Rule r);  // 'a', 'b', 'g', 'd'

bool rule_applicable(const CycloidParams& c, Rule r);

/// One shear step. Throws std::invalid_argument when the guard fails.
/// The area is invariant under every rule.
CycloidParams apply_rule(const CycloidParams& c, Rule r);

bool is_irreducible(const CycloidParams& c, std::span<const Rule> rules);

inline constexpr Rule kBetaDelta[] = {Rule::Beta, Rule::Delta};
inline constexpr Rule kAlphaGamma[] = {Rule::Alpha, Rule::Gamma};
inline constexpr Rule kGammaDelta[] = {Rule::Gamma, Rule::Delta};

enum class Strength { Reducible, Weak, Strong };

/// Classification for gamma / delta irreducibility: weak when the parameter
/// dropped strictly below its partner, strong when they are equal.
Strength irreducibility_strength(const CycloidParams& c, Rule r);

struct ReductionStep {
  Rule rule;
  CycloidParams before, after;
};

/// A run of reduction steps. Consecutive applications of one rule are stored
/// as a single macro (rule, count); steps() expands them on demand, so the
/// isomorphism decision never pays for the expansion.
struct ReductionChain {
  CycloidParams initial, final_params;

  struct Macro {
    Rule rule;
    long long count;
    CycloidParams before;
  };
  std::vector<Macro> macros;

  long long step_count() const;
  std::vector<ReductionStep> steps() const;
  std::string rule_word() const;  // expanded, e.g. "dbbbbdd"
};

/// Euclid-style reduction until beta == delta (== gcd of the originals).
/// The loop is modulo-accelerated; the returned chain still describes every
/// single-rule step.
ReductionChain beta_delta_reduce(const CycloidParams& c);

/// Dual reduction until alpha == gamma.
ReductionChain alpha_gamma_reduce(const CycloidParams& c);

/// Decision procedure: equal beta-delta normal forms. O(log max(beta, delta)).
bool cycloid_isomorphic(const CycloidParams& c1, const CycloidParams& c2);

/// Generic chain runner for an arbitrary rule set, applied in the given
/// priority order. Detects parameter recurrence (the gamma-delta set cycles)
/// and reports it instead of diverging.
struct ChainRun {
  ReductionChain chain;
  bool looped = false;
  CycloidParams loop_at;
};
ChainRun run_rules(const CycloidParams& c, std::span<const Rule> priority,
                   long long max_steps = 1'000'000);

/// Explicit node bijection between the nets of c and apply_rule(c, r):
/// the parallelogram translation for the rule followed by the fold of the
/// target cycloid. Validates as a type-preserving isomorphism.
IsoWitness shear_witness(const CycloidParams& c, Rule r);

/// Witness for a whole chain, composed step by step. With strict set, every
/// intermediate witness is validated, not only the composite.
IsoWitness chain_witness(const ReductionChain& chain, bool strict = false);

/// The symmetric cycloid C(beta, alpha, delta, gamma) with the type-swapping
/// net bijection t(xi,eta) -> fold of (eta+beta, xi-alpha).
std::pair<CycloidParams, IsoWitness> symmetric_cycloid(const CycloidParams& c);

}  // namespace cycloid
