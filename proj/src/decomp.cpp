#include "flownet/decomp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "flownet/error.hpp"

namespace flownet {

int FlowDecomposition::path_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const FlowComponent& c) { return c.kind == ComponentKind::kPath; }));
}

int FlowDecomposition::cycle_count() const {
  return static_cast<int>(components.size()) - path_count();
}

namespace {

// Simple s->t path over arcs with y > 0, depth-first in ArcId order.
std::vector<ArcId> positive_path(const Digraph& d, const std::vector<Capacity>& y,
                                 VertexId s, VertexId t) {
  std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
  std::vector<ArcId> path;
  std::vector<std::size_t> cursor{0};
  std::vector<VertexId> stack{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    if (v == t) return path;
    auto outs = d.out_arcs(v);
    std::size_t& i = cursor.back();
    while (i < outs.size() && (y[static_cast<std::size_t>(outs[i])] <= 0 ||
                               seen[static_cast<std::size_t>(d.arc(outs[i]).head)])) {
      ++i;
    }
    if (i == outs.size()) {
      stack.pop_back();
      cursor.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const ArcId a = outs[i++];
    const VertexId w = d.arc(a).head;
    seen[static_cast<std::size_t>(w)] = true;
    path.push_back(a);
    stack.push_back(w);
    cursor.push_back(0);
  }
  return {};
}

// Some directed cycle over arcs with y > 0, as an arc list; empty if none.
std::vector<ArcId> positive_cycle(const Digraph& d, const std::vector<Capacity>& y) {
  const VertexId n = d.vertex_count();
  enum Color : char { kWhite, kGray, kBlack };
  std::vector<Color> color(static_cast<std::size_t>(n), kWhite);
  for (VertexId root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != kWhite) continue;
    std::vector<VertexId> stack{root};
    std::vector<std::size_t> cursor{0};
    std::vector<ArcId> arcs;
    color[static_cast<std::size_t>(root)] = kGray;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      auto outs = d.out_arcs(v);
      std::size_t& i = cursor.back();
      while (i < outs.size() && (y[static_cast<std::size_t>(outs[i])] <= 0 ||
                                 color[static_cast<std::size_t>(d.arc(outs[i]).head)] == kBlack)) {
        ++i;
      }
      if (i == outs.size()) {
        color[static_cast<std::size_t>(v)] = kBlack;
        stack.pop_back();
        cursor.pop_back();
        if (!arcs.empty()) arcs.pop_back();
        continue;
      }
      const ArcId a = outs[i++];
      const VertexId w = d.arc(a).head;
      if (color[static_cast<std::size_t>(w)] == kGray) {
        // The cycle is the tail of the current stack starting at w.
        const auto pos = static_cast<std::size_t>(
            std::find(stack.begin(), stack.end(), w) - stack.begin());
        std::vector<ArcId> cycle(arcs.begin() + static_cast<std::ptrdiff_t>(pos), arcs.end());
        cycle.push_back(a);
        return cycle;
      }
      color[static_cast<std::size_t>(w)] = kGray;
      arcs.push_back(a);
      stack.push_back(w);
      cursor.push_back(0);
    }
  }
  return {};
}

Capacity min_on(const std::vector<Capacity>& y, const std::vector<ArcId>& arcs) {
  Capacity m = std::numeric_limits<Capacity>::max();
  for (ArcId a : arcs) m = std::min(m, y[static_cast<std::size_t>(a)]);
  return m;
}

}  // namespace

FlowDecomposition decompose(const Network& net, const Flow& flow) {
  validate_flow(net, flow);
  const Digraph& d = net.digraph();
  std::vector<Capacity> y = flow.x;
  FlowDecomposition dec;
  Capacity remaining = flow.value;
  while (remaining > 0) {
    std::vector<ArcId> path = positive_path(d, y, net.source(), net.sink());
    if (path.empty()) throw std::logic_error("positive flow without an s-t path");
    const Capacity amount = std::min(min_on(y, path), remaining);
    for (ArcId a : path) y[static_cast<std::size_t>(a)] -= amount;
    remaining -= amount;
    FlowComponent c;
    c.kind = ComponentKind::kPath;
    c.vertices = path_vertices(d, net.source(), path);
    c.arcs = std::move(path);
    c.value = amount;
    dec.components.push_back(std::move(c));
  }
  for (;;) {
    std::vector<ArcId> cycle = positive_cycle(d, y);
    if (cycle.empty()) break;
    const Capacity amount = min_on(y, cycle);
    for (ArcId a : cycle) y[static_cast<std::size_t>(a)] -= amount;
    FlowComponent c;
    c.kind = ComponentKind::kCycle;
    c.vertices = path_vertices(d, d.arc(cycle.front()).tail, cycle);
    c.arcs = std::move(cycle);
    c.value = amount;
    dec.components.push_back(std::move(c));
  }
  if (std::any_of(y.begin(), y.end(), [](Capacity v) { return v != 0; })) {
    throw std::logic_error("decomposition left residual flow");
  }
  return dec;
}

std::vector<Capacity> recompose(const Network& net, const FlowDecomposition& dec) {
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  for (const FlowComponent& c : dec.components) {
    for (ArcId a : c.arcs) x[static_cast<std::size_t>(a)] = checked_add(x[static_cast<std::size_t>(a)], c.value);
  }
  return x;
}

Flow acyclify(const Network& net, const Flow& flow) {
  validate_flow(net, flow);
  std::vector<Capacity> y = flow.x;
  for (;;) {
    std::vector<ArcId> cycle = positive_cycle(net.digraph(), y);
    if (cycle.empty()) break;
    const Capacity amount = min_on(y, cycle);
    for (ArcId a : cycle) y[static_cast<std::size_t>(a)] -= amount;
  }
  return Flow{std::move(y), flow.value};
}

Flow truncate_flow(const Network& net, const FlowDecomposition& dec,
                   Capacity target) {
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  Capacity left = target;
  for (const FlowComponent& c : dec.components) {
    if (left == 0) break;
    if (c.kind != ComponentKind::kPath) continue;
    const Capacity take = std::min(left, c.value);
    for (ArcId a : c.arcs) x[static_cast<std::size_t>(a)] += take;
    left -= take;
  }
  if (left != 0) throw PreconditionError("decomposition carries less than the target");
  return make_flow(net, std::move(x));
}

}  // namespace flownet
