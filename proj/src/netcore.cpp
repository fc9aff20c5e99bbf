#include "flownet/netcore.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "flownet/error.hpp"

namespace flownet {

Digraph::Digraph(VertexId vertex_count, std::vector<Arc> arcs,
                 std::vector<ArcId> origin)
    : vertex_count_(vertex_count),
      arcs_(std::move(arcs)),
      origin_(std::move(origin)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  if (!origin_.empty() && origin_.size() != arcs_.size()) {
    throw InputError("origin map length differs from arc count");
  }
  out_.resize(static_cast<std::size_t>(vertex_count_));
  in_.resize(static_cast<std::size_t>(vertex_count_));
  for (ArcId a = 0; a < arc_count(); ++a) {
    const Arc& e = arcs_[static_cast<std::size_t>(a)];
    if (!valid_vertex(e.tail) || !valid_vertex(e.head)) {
      throw InputError("arc " + std::to_string(a) + " has an endpoint out of range");
    }
    if (e.tail == e.head) {
      throw InputError("arc " + std::to_string(a) + " is a self-loop");
    }
    out_[static_cast<std::size_t>(e.tail)].push_back(a);
    in_[static_cast<std::size_t>(e.head)].push_back(a);
  }
}

int Digraph::max_out_degree() const {
  int best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, out_degree(v));
  return best;
}

int Digraph::max_in_degree() const {
  int best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, in_degree(v));
  return best;
}

Network::Network(Digraph digraph, VertexId source, VertexId sink,
                 std::vector<Capacity> capacities)
    : digraph_(std::move(digraph)),
      source_(source),
      sink_(sink),
      capacities_(std::move(capacities)) {
  if (!digraph_.valid_vertex(source_) || !digraph_.valid_vertex(sink_)) {
    throw InputError("source or sink out of range");
  }
  if (source_ == sink_) throw InputError("source equals sink");
  if (capacities_.size() != static_cast<std::size_t>(digraph_.arc_count())) {
    throw InputError("capacity list length differs from arc count");
  }
  for (std::size_t a = 0; a < capacities_.size(); ++a) {
    if (capacities_[a] < 1) {
      throw InputError("arc " + std::to_string(a) + " has capacity < 1");
    }
  }
}

Capacity Network::max_capacity() const noexcept {
  Capacity best = 0;
  for (Capacity c : capacities_) best = std::max(best, c);
  return best;
}

Capacity checked_add(Capacity a, Capacity b) {
  Capacity out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("capacity overflow");
  return out;
}

Capacity flow_value(const Network& net, std::span<const Capacity> x) {
  Capacity out = 0;
  const VertexId s = net.source();
  for (ArcId a : net.digraph().out_arcs(s)) out = checked_add(out, x[static_cast<std::size_t>(a)]);
  for (ArcId a : net.digraph().in_arcs(s)) out = checked_add(out, -x[static_cast<std::size_t>(a)]);
  return out;
}

Flow zero_flow(const Network& net) {
  return Flow{std::vector<Capacity>(static_cast<std::size_t>(net.arc_count()), 0), 0};
}

Flow make_flow(const Network& net, std::vector<Capacity> x) {
  if (x.size() != static_cast<std::size_t>(net.arc_count())) {
    throw InputError("flow length differs from arc count");
  }
  Flow f;
  f.value = flow_value(net, x);
  f.x = std::move(x);
  validate_flow(net, f);
  return f;
}

void validate_flow(const Network& net, const Flow& flow) {
  const Digraph& d = net.digraph();
  if (flow.x.size() != static_cast<std::size_t>(d.arc_count())) {
    throw InputError("flow length differs from arc count");
  }
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Capacity xa = flow.x[static_cast<std::size_t>(a)];
    if (xa < 0 || xa > net.capacity(a)) {
      throw InputError("arc " + std::to_string(a) + " violates its capacity bound");
    }
  }
  std::vector<Capacity> balance(static_cast<std::size_t>(d.vertex_count()), 0);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Capacity xa = flow.x[static_cast<std::size_t>(a)];
    auto& out = balance[static_cast<std::size_t>(d.arc(a).tail)];
    auto& in = balance[static_cast<std::size_t>(d.arc(a).head)];
    out = checked_add(out, xa);
    in = checked_add(in, -xa);
  }
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) {
      throw InputError("conservation violated at vertex " + std::to_string(v));
    }
  }
  const Capacity out_s = balance[static_cast<std::size_t>(net.source())];
  const Capacity in_t = -balance[static_cast<std::size_t>(net.sink())];
  if (out_s != flow.value || in_t != flow.value) {
    throw InputError("flow value does not match source/sink balance");
  }
  if (flow.value < 0) throw InputError("flow value is negative");
}

bool is_valid_flow(const Network& net, const Flow& flow) noexcept {
  try {
    validate_flow(net, flow);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Digraph support(const Network& net, const Flow& flow) {
  std::vector<Arc> arcs;
  std::vector<ArcId> origin;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (flow.x[static_cast<std::size_t>(a)] > 0) {
      arcs.push_back(net.arc(a));
      origin.push_back(a);
    }
  }
  return Digraph(net.vertex_count(), std::move(arcs), std::move(origin));
}

std::optional<std::vector<VertexId>> topological_order(const Digraph& d) {
  std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()));
  for (VertexId v = 0; v < d.vertex_count(); ++v) indeg[static_cast<std::size_t>(v)] = d.in_degree(v);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(d.vertex_count()));
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (ArcId a : d.out_arcs(v)) {
      if (--indeg[static_cast<std::size_t>(d.arc(a).head)] == 0) ready.push(d.arc(a).head);
    }
  }
  if (order.size() != static_cast<std::size_t>(d.vertex_count())) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

namespace {

std::vector<bool> search(const Digraph& d, VertexId root,
                         const std::vector<bool>& arc_enabled, VertexId blocked,
                         bool forward) {
  std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
  if (root == blocked) return seen;
  std::vector<VertexId> stack{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : forward ? d.out_arcs(v) : d.in_arcs(v)) {
      if (!arc_enabled.empty() && !arc_enabled[static_cast<std::size_t>(a)]) continue;
      const VertexId w = forward ? d.arc(a).head : d.arc(a).tail;
      if (w == blocked || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

std::vector<bool> reachable_from(const Digraph& d, VertexId from,
                                 const std::vector<bool>& arc_enabled,
                                 VertexId blocked) {
  return search(d, from, arc_enabled, blocked, true);
}

std::vector<bool> reaching(const Digraph& d, VertexId to,
                           const std::vector<bool>& arc_enabled, VertexId blocked) {
  return search(d, to, arc_enabled, blocked, false);
}

std::vector<ArcId> bfs_path(const Digraph& d, VertexId s, VertexId t,
                            const std::vector<bool>& arc_enabled) {
  if (s == t) return {};
  std::vector<ArcId> pred(static_cast<std::size_t>(d.vertex_count()), kNoArc);
  std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
  std::deque<VertexId> queue{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (ArcId a : d.out_arcs(v)) {
      if (!arc_enabled.empty() && !arc_enabled[static_cast<std::size_t>(a)]) continue;
      const VertexId w = d.arc(a).head;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      pred[static_cast<std::size_t>(w)] = a;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(t)]) return {};
  std::vector<ArcId> path;
  for (VertexId v = t; v != s; v = d.arc(pred[static_cast<std::size_t>(v)]).tail) {
    path.push_back(pred[static_cast<std::size_t>(v)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<VertexId> path_vertices(const Digraph& d, VertexId start,
                                    std::span<const ArcId> arcs) {
  std::vector<VertexId> out{start};
  for (ArcId a : arcs) out.push_back(d.arc(a).head);
  return out;
}

Network restrict_arcs(const Network& net, const std::vector<bool>& keep) {
  std::vector<Arc> arcs;
  std::vector<ArcId> origin;
  std::vector<Capacity> caps;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (!keep[static_cast<std::size_t>(a)]) continue;
    arcs.push_back(net.arc(a));
    origin.push_back(a);
    caps.push_back(net.capacity(a));
  }
  return Network(Digraph(net.vertex_count(), std::move(arcs), std::move(origin)),
                 net.source(), net.sink(), std::move(caps));
}

Network with_capacities(const Network& net, std::vector<Capacity> capacities) {
  return Network(net.digraph(), net.source(), net.sink(), std::move(capacities));
}

}  // namespace flownet
