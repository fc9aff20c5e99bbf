#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "flownet/decomp.hpp"
#include "flownet/netcore.hpp"

namespace flownet {

// Network file format, line oriented, '#' starts a comment:
//   p flownet <n> <m>      first non-comment line
//   s <v>                  exactly once
//   t <v>                  exactly once
//   a <tail> <head> <cap>  exactly m times, in ArcId order
// Vertices are 1-based in files and 0-based in memory.
Network parse_network(std::istream& in);
Network parse_network(std::string_view text);
void write_network(std::ostream& out, const Network& net);
std::string network_to_string(const Network& net);

// {"value": v, "flow": [{"arc": a, "x": x}, ...], "decomposition": [...]}
// Arcs with x = 0 are omitted; vertices and arcs are 0-based ids.
nlohmann::json flow_to_json(const Flow& flow);
nlohmann::json decomposition_to_json(const FlowDecomposition& dec);
nlohmann::json flow_with_decomposition(const Network& net, const Flow& flow);

// Reads the "flow" array (and ignores other keys); the result is validated
// against `net`.
Flow flow_from_json(const Network& net, const nlohmann::json& j);

// Graphviz rendering; arcs with positive flow are drawn bold when a flow is
// given.
std::string to_dot(const Network& net, const Flow* flow = nullptr);

}  // namespace flownet
