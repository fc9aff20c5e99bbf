#include "flownet/io.hpp"

#include <istream>
#include <limits>
#include <optional>
#include <sstream>

#include "flownet/error.hpp"

namespace flownet {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::int64_t read_int(std::istringstream& fields, int line, const char* what) {
  std::string token;
  if (!(fields >> token)) fail(line, std::string("missing ") + what);
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + token + "'");
  }
  if (used != token.size()) fail(line, std::string("bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

Network parse_network(std::istream& in) {
  std::optional<std::int64_t> n;
  std::int64_t m = 0;
  std::optional<VertexId> s;
  std::optional<VertexId> t;
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  std::string raw;
  int line = 0;
  auto vertex = [&](std::istringstream& fields, const char* what) {
    const std::int64_t v = read_int(fields, line, what);
    if (v < 1 || v > *n) fail(line, std::string(what) + " " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v - 1);
  };
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (!n && tag != "p") fail(line, "expected 'p flownet <n> <m>' first");
    if (tag == "p") {
      if (n) fail(line, "duplicate problem line");
      std::string kind;
      fields >> kind;
      if (kind != "flownet") fail(line, "problem kind must be 'flownet'");
      n = read_int(fields, line, "vertex count");
      m = read_int(fields, line, "arc count");
      if (*n < 2 || *n > std::numeric_limits<VertexId>::max()) fail(line, "vertex count must be >= 2");
      if (m < 0 || m > std::numeric_limits<ArcId>::max()) fail(line, "bad arc count");
    } else if (tag == "s") {
      if (s) fail(line, "duplicate source line");
      s = vertex(fields, "source");
    } else if (tag == "t") {
      if (t) fail(line, "duplicate sink line");
      t = vertex(fields, "sink");
    } else if (tag == "a") {
      if (static_cast<std::int64_t>(arcs.size()) == m) fail(line, "more arcs than declared");
      const VertexId u = vertex(fields, "tail");
      const VertexId v = vertex(fields, "head");
      const Capacity c = read_int(fields, line, "capacity");
      if (u == v) fail(line, "self-loop");
      if (c < 1) fail(line, "capacity must be >= 1");
      arcs.push_back({u, v});
      caps.push_back(c);
    } else {
      fail(line, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail(line, "trailing token '" + extra + "'");
  }
  if (!n) throw InputError("missing problem line");
  if (!s) throw InputError("missing source line");
  if (!t) throw InputError("missing sink line");
  if (static_cast<std::int64_t>(arcs.size()) != m) {
    throw InputError("declared " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
  }
  if (*s == *t) throw InputError("source equals sink");
  return Network(Digraph(static_cast<VertexId>(*n), std::move(arcs)), *s, *t, std::move(caps));
}

Network parse_network(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_network(in);
}

void write_network(std::ostream& out, const Network& net) {
  out << "p flownet " << net.vertex_count() << ' ' << net.arc_count() << '\n';
  out << "s " << net.source() + 1 << '\n';
  out << "t " << net.sink() + 1 << '\n';
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    out << "a " << net.arc(a).tail + 1 << ' ' << net.arc(a).head + 1 << ' '
        << net.capacity(a) << '\n';
  }
}

std::string network_to_string(const Network& net) {
  std::ostringstream out;
  write_network(out, net);
  return out.str();
}

nlohmann::json flow_to_json(const Flow& flow) {
  nlohmann::json arcs = nlohmann::json::array();
  for (std::size_t a = 0; a < flow.x.size(); ++a) {
    if (flow.x[a] > 0) arcs.push_back({{"arc", a}, {"x", flow.x[a]}});
  }
  return {{"value", flow.value}, {"flow", std::move(arcs)}};
}

nlohmann::json decomposition_to_json(const FlowDecomposition& dec) {
  nlohmann::json out = nlohmann::json::array();
  for (const FlowComponent& c : dec.components) {
    out.push_back({{"kind", c.kind == ComponentKind::kPath ? "path" : "cycle"},
                   {"vertices", c.vertices},
                   {"value", c.value}});
  }
  return out;
}

nlohmann::json flow_with_decomposition(const Network& net, const Flow& flow) {
  nlohmann::json j = flow_to_json(flow);
  j["decomposition"] = decomposition_to_json(decompose(net, flow));
  return j;
}

Flow flow_from_json(const Network& net, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("flow") || !j["flow"].is_array()) {
    throw InputError("flow JSON needs a \"flow\" array");
  }
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  for (const auto& entry : j["flow"]) {
    if (!entry.is_object() || !entry.contains("arc") || !entry.contains("x") ||
        !entry["arc"].is_number_integer() || !entry["x"].is_number_integer()) {
      throw InputError("flow entries need integer \"arc\" and \"x\"");
    }
    const auto a = entry["arc"].get<std::int64_t>();
    if (a < 0 || a >= net.arc_count()) throw InputError("flow arc id out of range");
    x[static_cast<std::size_t>(a)] = entry["x"].get<Capacity>();
  }
  Flow f = make_flow(net, std::move(x));
  if (j.contains("value") && j["value"] != f.value) {
    throw InputError("declared flow value does not match the arc values");
  }
  return f;
}

std::string to_dot(const Network& net, const Flow* flow) {
  std::ostringstream out;
  out << "digraph flownet {\n";
  out << "  " << net.source() << " [shape=box,label=\"s\"];\n";
  out << "  " << net.sink() << " [shape=box,label=\"t\"];\n";
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    out << "  " << net.arc(a).tail << " -> " << net.arc(a).head << " [label=\"";
    if (flow) out << flow->x[static_cast<std::size_t>(a)] << '/';
    out << net.capacity(a) << '"';
    if (flow && flow->x[static_cast<std::size_t>(a)] > 0) out << ",style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flownet
