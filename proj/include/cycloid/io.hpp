#pragma once

#include <iosfwd>
#include <string>

#include "cycloid/net.hpp"

namespace cycloid {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical interchange serialization: sorted object keys, arrays in net
/// order, marking sorted by place id. Serializing a loaded net reproduces
/// the original document byte for byte.
std::string net_to_json(const CycloidNet& net);

CycloidNet net_from_json(const std::string& text);

CycloidNet read_net(const std::string& path);
void write_net(const CycloidNet& net, const std::string& path);

/// Graphviz view: transitions as boxes, forward places as solid circles,
/// backward places as dashed circles, marked places filled.
std::string net_to_dot(const CycloidNet& net);

}  // namespace cycloid
