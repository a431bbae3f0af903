#include "cycloid/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycloid/cycles.hpp"
#include "cycloid/io.hpp"
#include "cycloid/net.hpp"
#include "cycloid/oracle.hpp"
#include "cycloid/reduce.hpp"
#include "cycloid/synthesis.hpp"

namespace cycloid::cli {

using nlohmann::json;

namespace {

CycloidParams parse_params(const std::string& spec) {
  long long v[4];
  char sep[3];
  std::istringstream is(spec);
  if (!(is >> v[0] >> sep[0] >> v[1] >> sep[1] >> v[2] >> sep[2] >> v[3]) || sep[0] != ',' ||
      sep[1] != ',' || sep[2] != ',' || !(is >> std::ws).eof())
    throw CLI::ValidationError("--params", "expected four comma-separated integers, e.g. 2,3,3,3");
  try {
    return {v[0], v[1], v[2], v[3]};
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--params", e.what());
  }
}

json params_json(const CycloidParams& c) {
  return json{{"alpha", c.alpha()}, {"beta", c.beta()}, {"gamma", c.gamma()}, {"delta", c.delta()}};
}

std::string params_csv(const CycloidParams& c) {
  return std::to_string(c.alpha()) + "," + std::to_string(c.beta()) + "," +
         std::to_string(c.gamma()) + "," + std::to_string(c.delta());
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

Marking marking_for(const CycloidNet& net) {
  if (net.initial_marking) return *net.initial_marking;
  if (net.params) return standard_marking(*net.params, net);
  throw std::invalid_argument("the net file has neither a marking nor parameters");
}

int cmd_generate(const CycloidParams& c, bool with_marking, const std::string& output,
                 std::ostream& out) {
  CycloidNet net = generate_net(c);
  if (with_marking) net.initial_marking = standard_marking(c, net);
  if (output.empty())
    out << net_to_json(net);
  else
    write_net(net, output);
  return 0;
}

int cmd_reduce(const CycloidParams& c, const std::string& rules, bool trace, bool as_json,
               std::ostream& out) {
  ReductionChain chain = rules == "bd" ? beta_delta_reduce(c) : alpha_gamma_reduce(c);
  if (as_json) {
    json steps = json::array();
    for (const ReductionStep& s : chain.steps())
      steps.push_back({{"rule", rule_name(s.rule)},
                       {"from", params_json(s.before)},
                       {"to", params_json(s.after)}});
    emit(out, json{{"initial", params_json(chain.initial)},
                   {"final", params_json(chain.final_params)},
                   {"rule_word", chain.rule_word()},
                   {"steps", steps}});
    return 0;
  }
  if (trace)
    for (const ReductionStep& s : chain.steps())
      out << s.before.str() << " --" << rule_name(s.rule) << "--> " << s.after.str() << "\n";
  out << "final: " << params_csv(chain.final_params) << "\n";
  out << "steps: " << chain.step_count() << "\n";
  if (chain.step_count() > 0) out << "rule word: " << chain.rule_word() << "\n";
  return 0;
}

int cmd_iso(const CycloidParams& left, const CycloidParams& right, bool as_json,
            std::ostream& out) {
  CycloidParams nf_left = beta_delta_reduce(left).final_params;
  CycloidParams nf_right = beta_delta_reduce(right).final_params;
  bool iso = nf_left == nf_right;
  if (as_json) {
    emit(out, json{{"isomorphic", iso},
                   {"left_normal_form", params_json(nf_left)},
                   {"right_normal_form", params_json(nf_right)}});
    return 0;
  }
  out << (iso ? "true" : "false") << "\n";
  out << "left normal form: " << params_csv(nf_left) << "\n";
  out << "right normal form: " << params_csv(nf_right) << "\n";
  return 0;
}

int cmd_cyc(const CycloidParams& c, bool with_oracle, bool as_json, std::ostream& out,
            std::ostream& err) {
  CycleReport rep = analyze_cycles(c);
  long long oracle = -1;
  if (with_oracle) oracle = shortest_cycle(generate_net(c));
  if (as_json) {
    json j{{"cyc", rep.cyc},
           {"p", rep.forward_len},
           {"p_prime", rep.backward_len},
           {"lbc", rep.lbc},
           {"regular", rep.regular},
           {"co_regular", rep.co_regular},
           {"canonical_regular", rep.canonical_regular},
           {"witness", {{"i", rep.witness_i}, {"j", rep.witness_j}}}};
    if (with_oracle) j["oracle"] = oracle;
    emit(out, j);
  } else {
    out << "cyc = " << rep.cyc << "\n";
    out << "p = " << rep.forward_len << "\n";
    out << "p' = " << rep.backward_len << "\n";
    out << "lbc = " << (rep.lbc ? "true" : "false") << "\n";
    out << "witness: i=" << rep.witness_i << ", j=" << rep.witness_j << "\n";
    if (with_oracle) out << "oracle = " << oracle << "\n";
  }
  if (with_oracle && oracle != rep.cyc) {
    err << "error: oracle cycle length " << oracle << " contradicts the formula value " << rep.cyc
        << "\n";
    return 3;
  }
  return 0;
}

int cmd_synthesize(const std::string& file, bool with_chain, bool as_json, std::ostream& out) {
  CycloidNet net = read_net(file);
  BdRecovery rec = recover_bd_detail(net, default_base(net));
  if (as_json) {
    json j{{"params", params_json(rec.params)},
           {"base", net.transition_names[rec.base]},
           {"cut", net.transition_names[rec.cut.cut]},
           {"cut_lengths", {rec.cut.q, rec.cut.r}}};
    if (with_chain) {
      ChainRecovery chain = recover_chain(net);
      json rows = json::array();
      for (size_t i = 0; i < chain.labels.size(); ++i) {
        json row{{"anchor", net.transition_names[chain.anchors[i]]},
                 {"params", params_json(chain.labels[i])}};
        if (i + 1 < chain.labels.size())
          row["cut_lengths"] = {chain.cut_lengths[i].first, chain.cut_lengths[i].second};
        rows.push_back(std::move(row));
      }
      j["chain"] = rows;
    }
    emit(out, j);
    return 0;
  }
  out << "recovered: " << params_csv(rec.params) << "\n";
  out << "base: " << net.transition_names[rec.base] << ", cut: "
      << net.transition_names[rec.cut.cut] << " (lengths " << rec.cut.q << ", " << rec.cut.r
      << ")\n";
  if (with_chain) {
    ChainRecovery chain = recover_chain(net);
    for (size_t i = 0; i < chain.labels.size(); ++i) {
      out << "  " << net.transition_names[chain.anchors[i]] << "  "
          << chain.labels[i].str();
      if (i + 1 < chain.labels.size())
        out << "  cut (" << chain.cut_lengths[i].first << ", " << chain.cut_lengths[i].second
            << ")";
      out << "\n";
    }
  }
  return 0;
}

int cmd_simulate(const std::string& file, long long steps, bool do_explore, long long max_states,
                 bool as_json, std::ostream& out) {
  CycloidNet net = read_net(file);
  Marking m = marking_for(net);
  std::vector<std::string> fired;
  for (long long s = 0; s < steps; ++s) {
    int chosen = -1;
    for (int t = 0; t < net.transition_count(); ++t)
      if (enabled(net, m, t)) {
        chosen = t;
        break;
      }
    if (chosen < 0) break;  // dead marking
    fired.push_back(net.transition_names[chosen]);
    m = fire(net, m, chosen);
  }
  std::vector<std::string> marked;
  for (int p = 0; p < net.place_count(); ++p)
    if (m.test(p)) marked.push_back(net.place_name(p));
  std::sort(marked.begin(), marked.end());

  json j{{"fired", fired}, {"marking", marked}};
  if (!as_json) {
    for (size_t i = 0; i < fired.size(); ++i) out << "step " << i + 1 << ": fire " << fired[i] << "\n";
    out << "marking:";
    for (const std::string& p : marked) out << " " << p;
    out << "\n";
  }
  if (do_explore) {
    ExploreResult ex = explore(net, marking_for(net), max_states);
    if (as_json) {
      j["explore"] = {{"states", ex.states},
                      {"safe", ex.safe},
                      {"live", ex.live},
                      {"complete", ex.complete}};
    } else {
      out << "states: " << ex.states << (ex.complete ? "" : " (budget exceeded)") << "\n";
      out << "safe: " << (ex.safe ? "true" : "false") << "\n";
      out << "live: " << (ex.live ? "true" : "false") << "\n";
    }
  }
  if (as_json) emit(out, j);
  return 0;
}

int cmd_verify(const std::string& file, bool as_json, std::ostream& out) {
  CycloidNet net = read_net(file);
  VerifyResult res = verify_cycloid_net(net);
  if (as_json) {
    json j{{"cycloid", res.ok}};
    if (res.ok)
      j["params"] = params_json(*res.params);
    else
      j["reason"] = res.failure;
    emit(out, j);
  } else if (res.ok) {
    out << "cycloid net: yes\n";
    out << "params: " << params_csv(*res.params) << "\n";
  } else {
    out << "cycloid net: no\n";
    out << "reason: " << res.failure << "\n";
  }
  return res.ok ? 0 : 1;
}

int cmd_export_dot(const std::string& file, const std::string& output, bool as_json,
                   std::ostream& out) {
  CycloidNet net = read_net(file);
  std::string dot = net_to_dot(net);
  if (!output.empty()) {
    std::ofstream os(output);
    if (!os) throw parse_error("cannot write '" + output + "'");
    os << dot;
  } else if (as_json) {
    emit(out, json{{"dot", dot}});
  } else {
    out << dot;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cycloid nets: generation, reduction, isomorphism and synthesis"};
  app.require_subcommand(1);

  std::string params_spec, left_spec, right_spec, net_file, output, rules = "bd";
  bool with_marking = false, trace = false, as_json = false, with_oracle = false;
  bool with_chain = false, do_explore = false;
  long long steps = 0, max_states = 1'000'000;

  CLI::App* generate = app.add_subcommand("generate", "write the net of a cycloid as JSON");
  generate->add_option("--params", params_spec, "alpha,beta,gamma,delta")->required();
  generate->add_flag("--marking", with_marking, "attach the standard initial marking");
  generate->add_option("-o,--output", output, "output file (stdout when omitted)");
  generate->add_flag("--json", as_json, "the interchange output is already JSON");

  CLI::App* reduce = app.add_subcommand("reduce", "run a reduction chain to its normal form");
  reduce->add_option("--params", params_spec)->required();
  reduce->add_option("--rules", rules, "bd (beta-delta) or ag (alpha-gamma)")
      ->check(CLI::IsMember({"bd", "ag"}));
  reduce->add_flag("--trace", trace, "print every reduction step");
  reduce->add_flag("--json", as_json);

  CLI::App* iso = app.add_subcommand("iso", "decide cycloid isomorphism");
  iso->add_option("--left", left_spec)->required();
  iso->add_option("--right", right_spec)->required();
  iso->add_flag("--json", as_json);

  CLI::App* cyc = app.add_subcommand("cyc", "cycle lengths and lbc classification");
  cyc->add_option("--params", params_spec)->required();
  cyc->add_flag("--oracle", with_oracle, "cross-check with the net-level search");
  cyc->add_flag("--json", as_json);

  CLI::App* synthesize = app.add_subcommand("synthesize", "recover parameters from a bare net");
  synthesize->add_option("--net", net_file)->required();
  synthesize->add_flag("--chain", with_chain, "recover the whole reduction chain");
  synthesize->add_flag("--json", as_json);

  CLI::App* simulate = app.add_subcommand("simulate", "token game and reachability summary");
  simulate->add_option("--net", net_file)->required();
  simulate->add_option("--steps", steps, "number of firings to play");
  simulate->add_flag("--explore", do_explore, "exhaustive reachability summary");
  simulate->add_option("--max-states", max_states, "state budget for --explore");
  simulate->add_flag("--json", as_json);

  CLI::App* verify = app.add_subcommand("verify", "decide whether a net is a cycloid net");
  verify->add_option("--net", net_file)->required();
  verify->add_flag("--json", as_json);

  CLI::App* export_dot = app.add_subcommand("export-dot", "write a graphviz view of a net");
  export_dot->add_option("--net", net_file)->required();
  export_dot->add_option("-o,--output", output, "output file (stdout when omitted)");
  export_dot->add_flag("--json", as_json);

  std::vector<const char*> argv{"cycloid"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (generate->parsed()) return cmd_generate(parse_params(params_spec), with_marking, output, out);
    if (reduce->parsed()) return cmd_reduce(parse_params(params_spec), rules, trace, as_json, out);
    if (iso->parsed()) return cmd_iso(parse_params(left_spec), parse_params(right_spec), as_json, out);
    if (cyc->parsed()) return cmd_cyc(parse_params(params_spec), with_oracle, as_json, out, err);
    if (synthesize->parsed()) return cmd_synthesize(net_file, with_chain, as_json, out);
    if (simulate->parsed())
      return cmd_simulate(net_file, steps, do_explore, max_states, as_json, out);
    if (verify->parsed()) return cmd_verify(net_file, as_json, out);
    if (export_dot->parsed()) return cmd_export_dot(net_file, output, as_json, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const net_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace cycloid::cli
