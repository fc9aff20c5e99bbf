#include "flownet/maxflow.hpp"

#include <algorithm>
#include <deque>

#include "flownet/error.hpp"

namespace flownet {

ResidualGraph::ResidualGraph(VertexId vertex_count)
    : adj_(static_cast<std::size_t>(vertex_count)) {}

int ResidualGraph::add_edge(VertexId tail, VertexId head, Capacity capacity) {
  const int e = static_cast<int>(head_.size());
  head_.push_back(head);
  residual_.push_back(capacity);
  capacity_.push_back(capacity);
  head_.push_back(tail);
  residual_.push_back(0);
  capacity_.push_back(0);
  adj_[static_cast<std::size_t>(tail)].push_back(e);
  adj_[static_cast<std::size_t>(head)].push_back(e + 1);
  return e;
}

Capacity ResidualGraph::flow_on(int edge) const {
  return capacity_[static_cast<std::size_t>(edge)] - residual_[static_cast<std::size_t>(edge)];
}

Capacity ResidualGraph::augment(VertexId s, VertexId t, Capacity limit) {
  const std::size_t n = adj_.size();
  Capacity total = 0;
  std::vector<int> pred(n);
  while (total < limit) {
    std::fill(pred.begin(), pred.end(), -1);
    std::deque<VertexId> queue{s};
    pred[static_cast<std::size_t>(s)] = -2;
    while (!queue.empty() && pred[static_cast<std::size_t>(t)] == -1) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (int e : adj_[static_cast<std::size_t>(v)]) {
        const VertexId w = head_[static_cast<std::size_t>(e)];
        if (residual_[static_cast<std::size_t>(e)] <= 0 || pred[static_cast<std::size_t>(w)] != -1) continue;
        pred[static_cast<std::size_t>(w)] = e;
        queue.push_back(w);
      }
    }
    if (pred[static_cast<std::size_t>(t)] == -1) break;
    Capacity push = limit - total;
    for (VertexId v = t; v != s;) {
      const int e = pred[static_cast<std::size_t>(v)];
      push = std::min(push, residual_[static_cast<std::size_t>(e)]);
      v = head_[static_cast<std::size_t>(e ^ 1)];
    }
    for (VertexId v = t; v != s;) {
      const int e = pred[static_cast<std::size_t>(v)];
      residual_[static_cast<std::size_t>(e)] -= push;
      residual_[static_cast<std::size_t>(e ^ 1)] += push;
      v = head_[static_cast<std::size_t>(e ^ 1)];
    }
    total += push;
  }
  return total;
}

std::vector<bool> ResidualGraph::reachable(VertexId from) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<VertexId> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int e : adj_[static_cast<std::size_t>(v)]) {
      const VertexId w = head_[static_cast<std::size_t>(e)];
      if (residual_[static_cast<std::size_t>(e)] <= 0 || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

namespace {

ResidualGraph residual_of(const Network& net) {
  ResidualGraph g(net.vertex_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    g.add_edge(net.arc(a).tail, net.arc(a).head, net.capacity(a));
  }
  return g;
}

Flow flow_from(const Network& net, const ResidualGraph& g) {
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) x[static_cast<std::size_t>(a)] = g.flow_on(2 * a);
  Flow f;
  f.value = flow_value(net, x);
  f.x = std::move(x);
  return f;
}

}  // namespace

Flow max_flow(const Network& net, Capacity limit) {
  ResidualGraph g = residual_of(net);
  g.augment(net.source(), net.sink(), limit);
  return flow_from(net, g);
}

Cut cut_of(const Network& net, std::vector<bool> in_x) {
  Cut cut;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (in_x[static_cast<std::size_t>(v)]) cut.x.push_back(v);
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (in_x[static_cast<std::size_t>(net.arc(a).tail)] &&
        !in_x[static_cast<std::size_t>(net.arc(a).head)]) {
      cut.arcs_across.push_back(a);
      cut.capacity = checked_add(cut.capacity, net.capacity(a));
    }
  }
  cut.in_x = std::move(in_x);
  return cut;
}

Cut min_cut(const Network& net) {
  ResidualGraph g = residual_of(net);
  g.augment(net.source(), net.sink());
  return cut_of(net, g.reachable(net.source()));
}

Network unit_network(const Digraph& d, VertexId s, VertexId t) {
  return Network(d, s, t, std::vector<Capacity>(static_cast<std::size_t>(d.arc_count()), 1));
}

int arc_connectivity(const Digraph& d, VertexId s, VertexId t) {
  if (s == t) throw PreconditionError("arc connectivity needs s != t");
  return static_cast<int>(max_flow(unit_network(d, s, t)).value);
}

SplitNetwork split_vertices(const Network& net, Capacity bound,
                            std::span<const VertexId> exclude) {
  const VertexId n = net.vertex_count();
  std::vector<bool> skip(static_cast<std::size_t>(n), false);
  for (VertexId v : exclude) skip[static_cast<std::size_t>(v)] = true;

  SplitNetwork out;
  out.out_copy.resize(static_cast<std::size_t>(n));
  VertexId next = n;
  std::vector<VertexId> split_order;
  for (VertexId v = 0; v < n; ++v) {
    if (skip[static_cast<std::size_t>(v)]) {
      out.out_copy[static_cast<std::size_t>(v)] = v;
    } else {
      out.out_copy[static_cast<std::size_t>(v)] = next++;
      split_order.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    arcs.push_back({out.out_copy[static_cast<std::size_t>(net.arc(a).tail)], net.arc(a).head});
    caps.push_back(net.capacity(a));
    out.special_vertex.push_back(kNoVertex);
  }
  for (VertexId v : split_order) {
    arcs.push_back({v, out.out_copy[static_cast<std::size_t>(v)]});
    caps.push_back(bound);
    out.special_vertex.push_back(v);
  }
  out.original_arc_count = net.arc_count();
  out.network = Network(Digraph(next, std::move(arcs)), net.source(), net.sink(),
                        std::move(caps));
  return out;
}

Flow unsplit_flow(const SplitNetwork& split, const Network& original,
                  const Flow& flow) {
  std::vector<Capacity> x(flow.x.begin(), flow.x.begin() + split.original_arc_count);
  return make_flow(original, std::move(x));
}

LineNetwork line_digraph_network(const Network& net) {
  const Digraph& d = net.digraph();
  if (!is_acyclic(d)) throw PreconditionError("line digraph network needs an acyclic network");
  const VertexId s = net.source();
  const VertexId t = net.sink();
  for (ArcId a : d.out_arcs(s)) {
    if (d.arc(a).head == t) throw PreconditionError("line digraph network needs no s->t arc");
  }
  const ArcId m = d.arc_count();
  const VertexId s_prime = m;
  const VertexId t_prime = m + 1;
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  for (ArcId a : d.out_arcs(s)) {
    arcs.push_back({s_prime, a});
    caps.push_back(net.capacity(a));
  }
  for (ArcId a = 0; a < m; ++a) {
    for (ArcId b : d.out_arcs(d.arc(a).head)) {
      arcs.push_back({a, b});
      caps.push_back(std::min(net.capacity(a), net.capacity(b)));
    }
  }
  for (ArcId a : d.in_arcs(t)) {
    arcs.push_back({a, t_prime});
    caps.push_back(net.capacity(a));
  }
  LineNetwork out;
  out.original_arc_count = m;
  out.network = Network(Digraph(m + 2, std::move(arcs)), s_prime, t_prime, std::move(caps));
  return out;
}

Flow line_flow_to_original(const LineNetwork& line, const Network& original,
                           const Flow& flow) {
  std::vector<Capacity> x(static_cast<std::size_t>(original.arc_count()), 0);
  const Digraph& d = line.network.digraph();
  for (ArcId a = 0; a < original.arc_count(); ++a) {
    for (ArcId e : d.in_arcs(a)) x[static_cast<std::size_t>(a)] += flow.x[static_cast<std::size_t>(e)];
  }
  return make_flow(original, std::move(x));
}

Subdivision subdivide_arcs(const Network& net, const std::vector<bool>& selected) {
  Subdivision out;
  VertexId next = net.vertex_count();
  std::vector<Arc> arcs;
  std::vector<ArcId> origin;
  std::vector<Capacity> caps;
  out.image.resize(static_cast<std::size_t>(net.arc_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& e = net.arc(a);
    auto& img = out.image[static_cast<std::size_t>(a)];
    if (selected[static_cast<std::size_t>(a)]) {
      const VertexId w = next++;
      img.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({e.tail, w});
      img.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({w, e.head});
      origin.insert(origin.end(), 2, a);
      caps.insert(caps.end(), 2, net.capacity(a));
    } else {
      img.push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back(e);
      origin.push_back(a);
      caps.push_back(net.capacity(a));
    }
  }
  out.network = Network(Digraph(next, std::move(arcs), std::move(origin)),
                        net.source(), net.sink(), std::move(caps));
  return out;
}

Flow unsubdivide_flow(const Subdivision& sub, const Network& original,
                      const Flow& flow) {
  std::vector<Capacity> x(static_cast<std::size_t>(original.arc_count()));
  for (ArcId a = 0; a < original.arc_count(); ++a) {
    x[static_cast<std::size_t>(a)] =
        flow.x[static_cast<std::size_t>(sub.image[static_cast<std::size_t>(a)].front())];
  }
  return make_flow(original, std::move(x));
}

std::vector<ArcId> mincut_arcs(const Network& net) {
  ResidualGraph g = residual_of(net);
  g.augment(net.source(), net.sink());
  const std::vector<bool> from_s = g.reachable(net.source());
  std::vector<ArcId> out;
  if (from_s[static_cast<std::size_t>(net.sink())]) return out;
  // Reachability from each tail is computed once per distinct tail.
  std::vector<std::vector<bool>> from_u(static_cast<std::size_t>(net.vertex_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const VertexId u = net.arc(a).tail;
    const VertexId v = net.arc(a).head;
    if (from_s[static_cast<std::size_t>(v)]) continue;
    auto& ru = from_u[static_cast<std::size_t>(u)];
    if (ru.empty()) ru = g.reachable(u);
    if (ru[static_cast<std::size_t>(v)] || ru[static_cast<std::size_t>(net.sink())]) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace flownet
