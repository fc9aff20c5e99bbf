#include "flownet/strongflow.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "flownet/decomp.hpp"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

std::vector<ArcId> st_cut_arcs(const Digraph& d, VertexId s, VertexId t) {
  const std::vector<ArcId> path = bfs_path(d, s, t);
  if (path.empty()) throw PreconditionError("t is not reachable from s");
  std::vector<ArcId> out;
  std::vector<bool> enabled(static_cast<std::size_t>(d.arc_count()), true);
  for (ArcId a : path) {
    enabled[static_cast<std::size_t>(a)] = false;
    if (!reachable_from(d, s, enabled)[static_cast<std::size_t>(t)]) out.push_back(a);
    enabled[static_cast<std::size_t>(a)] = true;
  }
  return out;
}

CutArcChain cut_arc_chain(const Network& net, const Flow& flow) {
  if (flow.value == 0) throw PreconditionError("zero flow has no s-t path in its support");
  const Digraph dx = support(net, flow);
  const std::vector<ArcId> cuts = st_cut_arcs(dx, net.source(), net.sink());
  CutArcChain chain;
  for (ArcId a : cuts) chain.cut_arcs.push_back(dx.origin(a));
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const VertexId from = i == 0 ? net.source() : dx.arc(cuts[i - 1]).head;
    const VertexId to = i == cuts.size() ? net.sink() : dx.arc(cuts[i]).tail;
    const std::vector<bool> fwd = reachable_from(dx, from);
    const std::vector<bool> bwd = reaching(dx, to);
    std::vector<VertexId> block;
    for (VertexId v = 0; v < dx.vertex_count(); ++v) {
      if (fwd[static_cast<std::size_t>(v)] && bwd[static_cast<std::size_t>(v)]) block.push_back(v);
    }
    chain.blocks.push_back(std::move(block));
  }
  return chain;
}

int support_cut_arc_count(const Network& net, const Flow& flow) {
  if (flow.value == 0) throw PreconditionError("zero flow has no s-t path in its support");
  return static_cast<int>(st_cut_arcs(support(net, flow), net.source(), net.sink()).size());
}

namespace {

constexpr int kMaxQPaths = 4096;

struct BlockPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;  // ArcIds of the network
};

// Two arc-disjoint paths from `from` to `to` using support arcs inside the
// block, or fewer when they do not exist.
std::vector<BlockPath> block_paths(const Network& net, const Flow& x, const std::vector<int>& block_of,
                                   int block, VertexId from, VertexId to) {
  if (from == to) return {BlockPath{{from}, {}}, BlockPath{{from}, {}}};
  std::vector<Arc> list;
  std::vector<ArcId> ids;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& e = net.arc(a);
    if (x.x[static_cast<std::size_t>(a)] > 0 && block_of[static_cast<std::size_t>(e.tail)] == block &&
        block_of[static_cast<std::size_t>(e.head)] == block) {
      list.push_back(e);
      ids.push_back(a);
    }
  }
  std::vector<Capacity> caps(list.size(), 1);
  const Network inner(Digraph(net.vertex_count(), std::move(list)), from, to, std::move(caps));
  const Flow f = acyclify(inner, max_flow(inner, 2));
  std::vector<BlockPath> out;
  for (const FlowComponent& c : decompose(inner, f).components) {
    if (c.kind != ComponentKind::kPath) continue;
    BlockPath p{c.vertices, {}};
    for (ArcId a : c.arcs) p.arcs.push_back(ids[static_cast<std::size_t>(a)]);
    out.push_back(std::move(p));
  }
  return out;
}

// Q built from the per-block path pairs: the part of a block-0 path from y1
// on, the cut-arcs and first paths of the blocks in between, and the part of
// a block-j path up to `end`. Empty when y1 or `end` lies on neither path.
std::optional<std::vector<ArcId>> chained_q(const std::vector<std::vector<BlockPath>>& paths,
                                            const std::vector<ArcId>& cuts, VertexId y1,
                                            VertexId end, int j) {
  auto pick = [](const std::vector<BlockPath>& pair, VertexId v) -> std::optional<std::pair<const BlockPath*, std::size_t>> {
    for (const BlockPath& p : pair) {
      const auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
      if (it != p.vertices.end()) return std::make_pair(&p, static_cast<std::size_t>(it - p.vertices.begin()));
    }
    return std::nullopt;
  };
  const auto first = pick(paths[0], y1);
  const auto last = pick(paths[static_cast<std::size_t>(j)], end);
  if (!first || !last) return std::nullopt;
  std::vector<ArcId> q(first->first->arcs.begin() + static_cast<std::ptrdiff_t>(first->second),
                       first->first->arcs.end());
  for (int i = 1; i < j; ++i) {
    if (paths[static_cast<std::size_t>(i)].empty()) return std::nullopt;
    q.push_back(cuts[static_cast<std::size_t>(i - 1)]);
    const auto& mid = paths[static_cast<std::size_t>(i)].front().arcs;
    q.insert(q.end(), mid.begin(), mid.end());
  }
  q.push_back(cuts[static_cast<std::size_t>(j - 1)]);
  q.insert(q.end(), last->first->arcs.begin(),
           last->first->arcs.begin() + static_cast<std::ptrdiff_t>(last->second));
  return q;
}

// Simple paths from `from` to `to` over support arcs, depth-first, at most
// `limit`.
std::vector<std::vector<ArcId>> support_paths(const Network& net, const Flow& x, VertexId from,
                                              VertexId to, int limit) {
  const Digraph& d = net.digraph();
  std::vector<std::vector<ArcId>> out;
  std::vector<bool> on(static_cast<std::size_t>(d.vertex_count()), false);
  std::vector<ArcId> path;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (v == to) {
      out.push_back(path);
      return;
    }
    on[static_cast<std::size_t>(v)] = true;
    for (ArcId a : d.out_arcs(v)) {
      const VertexId w = d.arc(a).head;
      if (x.x[static_cast<std::size_t>(a)] == 0 || on[static_cast<std::size_t>(w)]) continue;
      path.push_back(a);
      self(self, w);
      path.pop_back();
    }
    on[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, from);
  return out;
}

// One rerouting step; returns an acyclic maximum flow with strictly fewer
// support cut-arcs.
Flow reroute(const Network& net, const Flow& x, int current) {
  const CutArcChain chain = cut_arc_chain(net, x);
  const auto n = static_cast<std::size_t>(net.vertex_count());
  std::vector<int> block_of(n, -1);
  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    for (VertexId v : chain.blocks[i]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  const auto& cuts = chain.cut_arcs;
  std::vector<std::vector<BlockPath>> paths;
  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    const VertexId from = i == 0 ? net.source() : net.arc(cuts[i - 1]).head;
    const VertexId to = i == cuts.size() ? net.sink() : net.arc(cuts[i]).tail;
    paths.push_back(block_paths(net, x, block_of, static_cast<int>(i), from, to));
  }

  auto attempt = [&](const std::vector<ArcId>& p, const std::vector<ArcId>& q) -> std::optional<Flow> {
    std::vector<Capacity> y = x.x;
    for (ArcId a : p) y[static_cast<std::size_t>(a)] += 1;
    for (ArcId a : q) y[static_cast<std::size_t>(a)] -= 1;
    const Flow candidate = acyclify(net, make_flow(net, std::move(y)));
    if (support_cut_arc_count(net, candidate) < current) return candidate;
    return std::nullopt;
  };

  const Digraph& d = net.digraph();
  struct Candidate {
    VertexId y1;
    VertexId end;
    std::vector<ArcId> p;
  };
  std::vector<Candidate> candidates;
  for (VertexId y1 : chain.blocks[0]) {
    // BFS from y1 through vertices outside every block over zero-flow arcs,
    // stopping at the first vertex met in each later block.
    std::vector<ArcId> pred(n, kNoArc);
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{y1};
    seen[static_cast<std::size_t>(y1)] = true;
    while (!queue.empty()) {
      const VertexId w = queue.front();
      queue.pop_front();
      for (ArcId a : d.out_arcs(w)) {
        if (x.x[static_cast<std::size_t>(a)] > 0) continue;
        const VertexId h = d.arc(a).head;
        const int hb = block_of[static_cast<std::size_t>(h)];
        if (seen[static_cast<std::size_t>(h)] || hb == 0) continue;
        seen[static_cast<std::size_t>(h)] = true;
        pred[static_cast<std::size_t>(h)] = a;
        if (hb < 0) {
          queue.push_back(h);
          continue;
        }
        Candidate c{y1, h, {}};
        for (VertexId v = h; v != y1; v = d.arc(pred[static_cast<std::size_t>(v)]).tail) {
          c.p.push_back(pred[static_cast<std::size_t>(v)]);
        }
        std::reverse(c.p.begin(), c.p.end());
        candidates.push_back(std::move(c));
      }
    }
  }
  for (const Candidate& c : candidates) {
    const auto q = chained_q(paths, cuts, c.y1, c.end, block_of[static_cast<std::size_t>(c.end)]);
    if (!q) continue;
    if (auto f = attempt(c.p, *q)) return *f;
  }
  // The chained Q needs y1 on one of the two block-0 paths; otherwise fall
  // back to any support path with the same ends.
  for (const Candidate& c : candidates) {
    for (const auto& q : support_paths(net, x, c.y1, c.end, kMaxQPaths)) {
      if (auto f = attempt(c.p, q)) return *f;
    }
  }
  throw std::logic_error("no rerouting reduces the number of cut-arcs");
}

}  // namespace

StrongFlowResult two_arc_strong_max_flow(const Network& net) {
  if (arc_connectivity(net.digraph(), net.source(), net.sink()) < 2) {
    throw PreconditionError("two_arc_strong_max_flow needs arc connectivity >= 2");
  }
  StrongFlowResult out;
  out.flow = acyclify(net, max_flow(net));
  int count = support_cut_arc_count(net, out.flow);
  out.cut_arc_trace.push_back(count);
  while (count > 0) {
    out.flow = reroute(net, out.flow, count);
    const int next = support_cut_arc_count(net, out.flow);
    if (next >= count) throw std::logic_error("cut-arc count did not decrease");
    count = next;
    out.cut_arc_trace.push_back(count);
  }
  return out;
}

}  // namespace flownet
