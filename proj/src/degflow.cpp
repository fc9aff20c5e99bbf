#include "flownet/degflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "flownet/decomp.hpp"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

WidestPath widest_path(const Network& net) {
  const Digraph& d = net.digraph();
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<Capacity> width(n, 0);
  std::vector<ArcId> pred(n, kNoArc);
  std::vector<bool> done(n, false);
  using Entry = std::pair<Capacity, VertexId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  width[static_cast<std::size_t>(net.source())] = std::numeric_limits<Capacity>::max();
  queue.push({width[static_cast<std::size_t>(net.source())], net.source()});
  while (!queue.empty()) {
    const auto [w, v] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(v)]) continue;
    done[static_cast<std::size_t>(v)] = true;
    if (v == net.sink()) break;
    for (ArcId a : d.out_arcs(v)) {
      const VertexId u = d.arc(a).head;
      const Capacity through = std::min(w, net.capacity(a));
      if (!done[static_cast<std::size_t>(u)] && through > width[static_cast<std::size_t>(u)]) {
        width[static_cast<std::size_t>(u)] = through;
        pred[static_cast<std::size_t>(u)] = a;
        queue.push({through, u});
      }
    }
  }
  WidestPath out;
  if (!done[static_cast<std::size_t>(net.sink())]) return out;
  for (VertexId v = net.sink(); v != net.source(); v = d.arc(pred[static_cast<std::size_t>(v)]).tail) {
    out.arcs.push_back(pred[static_cast<std::size_t>(v)]);
  }
  std::reverse(out.arcs.begin(), out.arcs.end());
  out.value = width[static_cast<std::size_t>(net.sink())];
  return out;
}

Flow widest_path_flow(const Network& net) {
  const WidestPath path = widest_path(net);
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  for (ArcId a : path.arcs) x[static_cast<std::size_t>(a)] = path.value;
  return make_flow(net, std::move(x));
}

int support_out_degree(const Network& net, const Flow& flow) {
  return support(net, flow).max_out_degree();
}

int support_in_degree(const Network& net, const Flow& flow) {
  return support(net, flow).max_in_degree();
}

Flow unit_capacity_deg_max_flow(const Network& net, int k) {
  if (k < 1) throw InputError("degree bound must be >= 1");
  for (Capacity c : net.capacities()) {
    if (c != 1) throw PreconditionError("unit_capacity_deg_max_flow needs unit capacities");
  }
  const std::vector<VertexId> exclude{net.sink()};
  const SplitNetwork split = split_vertices(net, k, exclude);
  const Flow f = max_flow(split.network);
  return acyclify(net, unsplit_flow(split, net, f));
}

std::vector<VertexId> st_vertex_separators(const Digraph& d, VertexId s, VertexId t) {
  const std::vector<ArcId> path = bfs_path(d, s, t);
  if (path.empty()) throw PreconditionError("t is not reachable from s");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId v = d.arc(path[i]).head;
    if (!reachable_from(d, s, {}, v)[static_cast<std::size_t>(t)]) out.push_back(v);
  }
  return out;
}

std::vector<bool> st_relevant_arcs(const Network& net) {
  const Digraph& d = net.digraph();
  const std::vector<bool> from_s = reachable_from(d, net.source());
  const std::vector<bool> to_t = reaching(d, net.sink());
  std::vector<bool> keep(static_cast<std::size_t>(d.arc_count()));
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Arc& e = d.arc(a);
    keep[static_cast<std::size_t>(a)] = from_s[static_cast<std::size_t>(e.tail)] &&
                                        to_t[static_cast<std::size_t>(e.head)] &&
                                        e.head != net.source() && e.tail != net.sink();
  }
  return keep;
}

SeparatorChain separator_chain(const Network& net) {
  const Network pruned = restrict_arcs(net, st_relevant_arcs(net));
  const Digraph& d = pruned.digraph();
  SeparatorChain chain;
  chain.separators.push_back(net.source());
  for (VertexId v : st_vertex_separators(d, net.source(), net.sink())) chain.separators.push_back(v);
  chain.separators.push_back(net.sink());
  for (std::size_t j = 0; j + 1 < chain.separators.size(); ++j) {
    const VertexId a = chain.separators[j];
    const VertexId b = chain.separators[j + 1];
    const std::vector<bool> fwd = reachable_from(d, a, {}, b);
    const std::vector<bool> bwd = reaching(d, b, {}, a);
    std::vector<bool> in(static_cast<std::size_t>(d.vertex_count()), false);
    std::vector<VertexId> block;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      if (v == a || v == b || (fwd[static_cast<std::size_t>(v)] && bwd[static_cast<std::size_t>(v)])) {
        in[static_cast<std::size_t>(v)] = true;
        block.push_back(v);
      }
    }
    std::vector<ArcId> arcs;
    for (ArcId e = 0; e < d.arc_count(); ++e) {
      const Arc& arc = d.arc(e);
      if (in[static_cast<std::size_t>(arc.tail)] && in[static_cast<std::size_t>(arc.head)] &&
          arc.head != a && arc.tail != b) {
        arcs.push_back(d.origin(e));
      }
    }
    chain.blocks.push_back(std::move(block));
    chain.block_arcs.push_back(std::move(arcs));
  }
  return chain;
}

namespace {

// Decision for a network without (a,b)-vertex separators, given as the arcs
// `arcs` of `net` with source a and sink b. Returns per-arc values (indexed
// like `arcs`) of a flow of value k+1 with out-degree <= k, if any.
std::optional<std::vector<Capacity>> separator_free_block(const Network& net,
                                                          const std::vector<ArcId>& arcs,
                                                          VertexId a, VertexId b, int k) {
  const VertexId n = net.vertex_count();
  const VertexId star = n;
  for (std::size_t cand = 0; cand < arcs.size(); ++cand) {
    const ArcId sv = arcs[cand];
    if (net.arc(sv).tail != a || net.capacity(sv) < 2) continue;
    // Arcs of N_i: block arcs other than sv (same order), then s*a and s*v_i.
    std::vector<Arc> list;
    std::vector<Capacity> caps;
    std::vector<std::size_t> index;  // arc of N_i -> position in `arcs`
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (j == cand) continue;
      list.push_back(net.arc(arcs[j]));
      caps.push_back(net.capacity(arcs[j]));
      index.push_back(j);
    }
    list.push_back({star, a});
    caps.push_back(k - 1);
    const auto star_v = static_cast<ArcId>(list.size());
    list.push_back({star, net.arc(sv).head});
    caps.push_back(net.capacity(sv));
    const Network ni(Digraph(n + 1, std::move(list)), star, b, std::move(caps));
    const std::vector<VertexId> exclude{star, a, b};
    const SplitNetwork split = split_vertices(ni, k, exclude);
    const Flow f = max_flow(split.network, k + 1);
    if (f.value < k + 1) continue;
    std::vector<Capacity> out(arcs.size(), 0);
    for (std::size_t e = 0; e < index.size(); ++e) out[index[e]] = f.x[e];
    out[cand] = f.x[static_cast<std::size_t>(star_v)];
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Flow> deg_flow_value_k_plus_1(const Network& net, int k) {
  if (k < 1) throw InputError("k must be >= 1");
  const Capacity target = k + 1;
  auto finish = [&](const Flow& f) {
    const Flow acyclic = acyclify(net, f);
    return truncate_flow(net, decompose(net, acyclic), target);
  };
  if (k == 1) {
    const WidestPath path = widest_path(net);
    if (path.value < target) return std::nullopt;
    return finish(widest_path_flow(net));
  }
  const Flow full = max_flow(net, target);
  if (full.value < target) return std::nullopt;
  if (k >= net.digraph().max_out_degree()) return finish(full);

  const SeparatorChain chain = separator_chain(net);
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  for (std::size_t j = 0; j < chain.block_arcs.size(); ++j) {
    const auto& arcs = chain.block_arcs[j];
    const VertexId a = chain.separators[j];
    const VertexId b = chain.separators[j + 1];
    const auto values = separator_free_block(net, arcs, a, b, k);
    if (!values) return std::nullopt;
    // Normalize the block flow: cancel cycles, keep exactly k+1 units.
    std::vector<Arc> list;
    std::vector<Capacity> caps;
    for (ArcId e : arcs) {
      list.push_back(net.arc(e));
      caps.push_back(net.capacity(e));
    }
    const Network block(Digraph(net.vertex_count(), std::move(list)), a, b, std::move(caps));
    const Flow bf = make_flow(block, *values);
    const Flow trimmed = truncate_flow(block, decompose(block, acyclify(block, bf)), target);
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      x[static_cast<std::size_t>(arcs[e])] += trimmed.x[e];
    }
  }
  Flow combined = make_flow(net, std::move(x));
  if (combined.value != target || support_out_degree(net, combined) > k) {
    throw std::logic_error("block flows did not combine into a valid witness");
  }
  return combined;
}

}  // namespace flownet
