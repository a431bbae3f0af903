#include "cycloid/reduce.hpp"

#include <set>
#include <stdexcept>

namespace cycloid {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Alpha: return "alpha";
    case Rule::Beta: return "beta";
    case Rule::Gamma: return "gamma";
    case Rule::Delta: return "delta";
  }
  return "?";
}

char rule_letter(Rule r) {
  switch (r) {
    case Rule::Alpha: return 'a';
    case Rule::Beta: return 'b';
    case Rule::Gamma: return 'g';
    case Rule::Delta: return 'd';
  }
  return '?';
}

bool rule_applicable(const CycloidParams& c, Rule r) {
  switch (r) {
    case Rule::Alpha: return c.alpha() > c.gamma();
    case Rule::Beta: return c.beta() > c.delta();
    case Rule::Gamma: return c.gamma() > c.alpha();
    case Rule::Delta: return c.delta() > c.beta();
  }
  return false;
}

CycloidParams apply_rule(const CycloidParams& c, Rule r) {
  if (!rule_applicable(c, r))
    throw std::invalid_argument(std::string("rule R_") + rule_name(r) +
                                " is not applicable to " + c.str());
  switch (r) {
    case Rule::Alpha:
      return {c.alpha() - c.gamma(), checked_add(c.beta(), c.delta()), c.gamma(), c.delta()};
    case Rule::Beta:
      return {checked_add(c.alpha(), c.gamma()), c.beta() - c.delta(), c.gamma(), c.delta()};
    case Rule::Gamma:
      return {c.alpha(), c.beta(), c.gamma() - c.alpha(), checked_add(c.delta(), c.beta())};
    case Rule::Delta:
      return {c.alpha(), c.beta(), checked_add(c.gamma(), c.alpha()), c.delta() - c.beta()};
  }
  throw std::logic_error("unreachable");
}

bool is_irreducible(const CycloidParams& c, std::span<const Rule> rules) {
  for (Rule r : rules)
    if (rule_applicable(c, r)) return false;
  return true;
}

Strength irreducibility_strength(const CycloidParams& c, Rule r) {
  long long lhs, rhs;
  switch (r) {
    case Rule::Gamma: lhs = c.gamma(), rhs = c.alpha(); break;
    case Rule::Delta: lhs = c.delta(), rhs = c.beta(); break;
    default:
      throw std::invalid_argument("irreducibility strength is defined for gamma and delta only");
  }
  if (lhs > rhs) return Strength::Reducible;
  return lhs == rhs ? Strength::Strong : Strength::Weak;
}

long long ReductionChain::step_count() const {
  long long n = 0;
  for (const Macro& m : macros) n += m.count;
  return n;
}

std::vector<ReductionStep> ReductionChain::steps() const {
  std::vector<ReductionStep> out;
  for (const Macro& m : macros) {
    CycloidParams cur = m.before;
    for (long long k = 0; k < m.count; ++k) {
      CycloidParams next = apply_rule(cur, m.rule);
      out.push_back({m.rule, cur, next});
      cur = next;
    }
  }
  return out;
}

std::string ReductionChain::rule_word() const {
  std::string w;
  for (const Macro& m : macros) w.append(static_cast<size_t>(m.count), rule_letter(m.rule));
  return w;
}

ReductionChain beta_delta_reduce(const CycloidParams& c0) {
  ReductionChain chain{c0, c0, {}};
  CycloidParams c = c0;
  while (c.beta() != c.delta()) {
    if (c.beta() > c.delta()) {
      long long k = (c.beta() - 1) / c.delta();
      chain.macros.push_back({Rule::Beta, k, c});
      c = {checked_add(c.alpha(), checked_mul(k, c.gamma())), c.beta() - k * c.delta(),
           c.gamma(), c.delta()};
    } else {
      long long k = (c.delta() - 1) / c.beta();
      chain.macros.push_back({Rule::Delta, k, c});
      c = {c.alpha(), c.beta(), checked_add(c.gamma(), checked_mul(k, c.alpha())),
           c.delta() - k * c.beta()};
    }
  }
  chain.final_params = c;
  return chain;
}

ReductionChain alpha_gamma_reduce(const CycloidParams& c0) {
  ReductionChain chain{c0, c0, {}};
  CycloidParams c = c0;
  while (c.alpha() != c.gamma()) {
    if (c.alpha() > c.gamma()) {
      long long k = (c.alpha() - 1) / c.gamma();
      chain.macros.push_back({Rule::Alpha, k, c});
      c = {c.alpha() - k * c.gamma(), checked_add(c.beta(), checked_mul(k, c.delta())),
           c.gamma(), c.delta()};
    } else {
      long long k = (c.gamma() - 1) / c.alpha();
      chain.macros.push_back({Rule::Gamma, k, c});
      c = {c.alpha(), c.beta(), c.gamma() - k * c.alpha(),
           checked_add(c.delta(), checked_mul(k, c.beta()))};
    }
  }
  chain.final_params = c;
  return chain;
}

bool cycloid_isomorphic(const CycloidParams& c1, const CycloidParams& c2) {
  return beta_delta_reduce(c1).final_params == beta_delta_reduce(c2).final_params;
}

ChainRun run_rules(const CycloidParams& c0, std::span<const Rule> priority, long long max_steps) {
  ChainRun run{ReductionChain{c0, c0, {}}, false, c0};
  std::set<std::array<long long, 4>> visited;
  CycloidParams c = c0;
  for (long long step = 0; step < max_steps; ++step) {
    visited.insert({c.alpha(), c.beta(), c.gamma(), c.delta()});
    Rule chosen{};
    bool any = false;
    for (Rule r : priority)
      if (rule_applicable(c, r)) {
        chosen = r;
        any = true;
        break;
      }
    if (!any) {
      run.chain.final_params = c;
      return run;
    }
    CycloidParams next = apply_rule(c, chosen);
    if (visited.contains({next.alpha(), next.beta(), next.gamma(), next.delta()})) {
      run.chain.final_params = c;
      run.looped = true;
      run.loop_at = next;
      return run;
    }
    run.chain.macros.push_back({chosen, 1, c});
    c = next;
  }
  throw std::runtime_error("rule chain exceeded " + std::to_string(max_steps) + " steps");
}

namespace {

Point shear_shift(const CycloidParams& c, Rule r) {
  switch (r) {
    case Rule::Delta: return {c.alpha(), -c.beta()};
    case Rule::Gamma: return {-c.alpha(), c.beta()};
    case Rule::Alpha: return {-c.gamma(), -c.delta()};
    case Rule::Beta: return {c.gamma(), c.delta()};
  }
  throw std::logic_error("unreachable");
}

// In generated nets place i shares the coordinate of its owner transition i,
// so one coordinate map covers all three node kinds.
IsoWitness coordinate_witness(const CycloidNet& from, const CycloidNet& to,
                              const CycloidParams& target, Point shift, bool mirrored,
                              bool swaps_types) {
  IsoWitness w;
  w.swaps_types = swaps_types;
  w.transitions.resize(from.transition_count());
  for (int i = 0; i < from.transition_count(); ++i) {
    Point p = from.coords[i];
    Point moved = mirrored ? Point{p.eta + shift.xi, p.xi + shift.eta} : p + shift;
    int img = to.transition_at(rho(target, moved));
    if (img < 0) throw std::logic_error("shear image left the fundamental parallelogram");
    w.transitions[i] = img;
  }
  w.forward_places = w.transitions;
  w.backward_places = w.transitions;
  return w;
}

}  // namespace

IsoWitness shear_witness(const CycloidParams& c, Rule r) {
  CycloidParams target = apply_rule(c, r);
  CycloidNet from = generate_net(c);
  CycloidNet to = generate_net(target);
  IsoWitness w = coordinate_witness(from, to, target, shear_shift(c, r), false, false);
  if (!witness_valid(from, to, w))
    throw std::logic_error("shear witness failed validation for " + c.str());
  return w;
}

IsoWitness chain_witness(const ReductionChain& chain, bool strict) {
  std::vector<ReductionStep> steps = chain.steps();
  if (steps.empty()) {
    CycloidNet net = generate_net(chain.initial);
    IsoWitness id;
    id.transitions.resize(net.transition_count());
    for (int i = 0; i < net.transition_count(); ++i) id.transitions[i] = i;
    id.forward_places = id.transitions;
    id.backward_places = id.transitions;
    return id;
  }
  IsoWitness acc = shear_witness(steps[0].before, steps[0].rule);
  for (size_t i = 1; i < steps.size(); ++i) {
    IsoWitness next = strict ? shear_witness(steps[i].before, steps[i].rule)
                             : coordinate_witness(generate_net(steps[i].before),
                                                  generate_net(steps[i].after), steps[i].after,
                                                  shear_shift(steps[i].before, steps[i].rule),
                                                  false, false);
    acc = compose_witness(acc, next);
  }
  if (!witness_valid(generate_net(chain.initial), generate_net(chain.final_params), acc))
    throw std::logic_error("composed chain witness failed validation");
  return acc;
}

std::pair<CycloidParams, IsoWitness> symmetric_cycloid(const CycloidParams& c) {
  CycloidParams sym = c.symmetric();
  CycloidNet from = generate_net(c);
  CycloidNet to = generate_net(sym);
  IsoWitness w = coordinate_witness(from, to, sym, {c.beta(), -c.alpha()}, true, true);
  if (!witness_valid(from, to, w))
    throw std::logic_error("symmetric-cycloid witness failed validation for " + c.str());
  return {sym, w};
}

}  // namespace cycloid
