#include "cycloid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace cycloid {

using nlohmann::json;

std::string net_to_json(const CycloidNet& net) {
  json j;
  j["transitions"] = net.transition_names;

  auto places = [&](const std::vector<std::string>& names, const std::vector<PlaceArc>& arcs) {
    json arr = json::array();
    for (size_t i = 0; i < names.size(); ++i) {
      json p;
      p["id"] = names[i];
      p["from"] = net.transition_names.at(arcs[i].from);
      p["to"] = net.transition_names.at(arcs[i].to);
      arr.push_back(std::move(p));
    }
    return arr;
  };
  j["forward_places"] = places(net.forward_names, net.forward_arcs);
  j["backward_places"] = places(net.backward_names, net.backward_arcs);

  if (net.initial_marking) {
    std::vector<std::string> marked;
    for (int p = 0; p < net.place_count(); ++p)
      if (net.initial_marking->test(p)) marked.push_back(net.place_name(p));
    std::sort(marked.begin(), marked.end());
    j["marking"] = marked;
  }
  if (net.params) {
    j["params"] = {{"alpha", net.params->alpha()},
                   {"beta", net.params->beta()},
                   {"gamma", net.params->gamma()},
                   {"delta", net.params->delta()}};
  }
  return j.dump(2) + "\n";
}

CycloidNet net_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid net file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("transitions") || !j.contains("forward_places") ||
      !j.contains("backward_places"))
    throw parse_error("invalid net file: transitions, forward_places and backward_places are required");

  CycloidNet net;
  std::unordered_map<std::string, int> tindex;
  for (const json& t : j["transitions"]) {
    if (!t.is_string()) throw parse_error("invalid net file: transition ids must be strings");
    std::string name = t.get<std::string>();
    if (!tindex.emplace(name, net.transition_count()).second)
      throw parse_error("invalid net file: duplicate transition id '" + name + "'");
    net.transition_names.push_back(std::move(name));
  }

  std::unordered_map<std::string, int> pindex;
  int next_place = 0;
  auto load_places = [&](const json& arr, std::vector<std::string>& names,
                         std::vector<PlaceArc>& arcs) {
    for (const json& p : arr) {
      if (!p.is_object() || !p.contains("id") || !p.contains("from") || !p.contains("to"))
        throw parse_error("invalid net file: every place needs id, from and to");
      std::string id = p["id"].get<std::string>();
      auto from = tindex.find(p["from"].get<std::string>());
      auto to = tindex.find(p["to"].get<std::string>());
      if (from == tindex.end() || to == tindex.end())
        throw parse_error("invalid net file: place '" + id + "' references an unknown transition");
      if (!pindex.emplace(id, next_place++).second)
        throw parse_error("invalid net file: duplicate place id '" + id + "'");
      names.push_back(std::move(id));
      arcs.push_back({from->second, to->second});
    }
  };
  load_places(j["forward_places"], net.forward_names, net.forward_arcs);
  load_places(j["backward_places"], net.backward_names, net.backward_arcs);

  if (j.contains("params")) {
    const json& p = j["params"];
    net.params = CycloidParams(p.at("alpha").get<long long>(), p.at("beta").get<long long>(),
                               p.at("gamma").get<long long>(), p.at("delta").get<long long>());
  }
  if (j.contains("marking")) {
    Marking m(net.place_count());
    for (const json& id : j["marking"]) {
      auto it = pindex.find(id.get<std::string>());
      if (it == pindex.end())
        throw parse_error("invalid net file: marking references unknown place '" +
                          id.get<std::string>() + "'");
      m.set(it->second);
    }
    net.initial_marking = std::move(m);
  }

  // Generated nets carry their coordinates in the ids; recover them so that
  // loaded files keep working with coordinate-based lookups.
  bool coords_ok = true;
  std::vector<Point> coords;
  for (const std::string& name : net.transition_names) {
    long long xi, eta;
    char colon, comma;
    std::istringstream is(name);
    char kind;
    if (is >> kind >> colon >> xi >> comma >> eta && kind == 't' && colon == ':' && comma == ',') {
      coords.push_back({xi, eta});
    } else {
      coords_ok = false;
      break;
    }
  }
  if (coords_ok && std::is_sorted(coords.begin(), coords.end())) net.coords = std::move(coords);

  net.finalize();
  return net;
}

CycloidNet read_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open net file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return net_from_json(buf.str());
}

void write_net(const CycloidNet& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write net file '" + path + "'");
  out << net_to_json(net);
}

std::string net_to_dot(const CycloidNet& net) {
  std::ostringstream os;
  os << "digraph cycloid {\n  rankdir=LR;\n";
  auto marked = [&](int global) {
    return net.initial_marking && net.initial_marking->test(global);
  };
  for (const std::string& t : net.transition_names)
    os << "  \"" << t << "\" [shape=box];\n";
  for (int i = 0; i < net.forward_count(); ++i)
    os << "  \"" << net.forward_names[i] << "\" [shape=circle"
       << (marked(net.global_forward(i)) ? ", style=filled" : "") << "];\n";
  for (int i = 0; i < net.backward_count(); ++i)
    os << "  \"" << net.backward_names[i] << "\" [shape=circle, style=\"dashed"
       << (marked(net.global_backward(i)) ? ",filled" : "") << "\"];\n";
  auto edges = [&](const std::vector<std::string>& names, const std::vector<PlaceArc>& arcs) {
    for (size_t i = 0; i < names.size(); ++i) {
      os << "  \"" << net.transition_names[arcs[i].from] << "\" -> \"" << names[i] << "\";\n";
      os << "  \"" << names[i] << "\" -> \"" << net.transition_names[arcs[i].to] << "\";\n";
    }
  };
  edges(net.forward_names, net.forward_arcs);
  edges(net.backward_names, net.backward_arcs);
  os << "}\n";
  return os.str();
}

}  // namespace cycloid
