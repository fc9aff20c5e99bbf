#include "flownet/tricot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "flownet/degflow.hpp"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

Capacity Tricot::total() const { return std::accumulate(value.begin(), value.end(), Capacity{0}); }

bool is_tricot(const Network& net, const Tricot& tricot) {
  const std::size_t k = tricot.endpoints.size();
  if (tricot.paths.size() != k || tricot.value.size() != k) return false;
  std::vector<bool> used(static_cast<std::size_t>(net.vertex_count()), false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& path = tricot.paths[i];
    if (path.empty()) return false;
    VertexId at = net.source();
    Capacity bottleneck = std::numeric_limits<Capacity>::max();
    for (ArcId a : path) {
      if (a < 0 || a >= net.arc_count() || net.arc(a).tail != at) return false;
      at = net.arc(a).head;
      if (at == net.source() || used[static_cast<std::size_t>(at)]) return false;
      used[static_cast<std::size_t>(at)] = true;
      bottleneck = std::min(bottleneck, net.capacity(a));
    }
    if (at != tricot.endpoints[i] || bottleneck != tricot.value[i]) return false;
  }
  return true;
}

namespace {

bool dominates(const std::vector<Capacity>& a, const std::vector<Capacity>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

bool DominanceSet::insert(Tricot t) {
  for (const Tricot& e : entries_) {
    if (dominates(e.value, t.value)) return false;
  }
  std::erase_if(entries_, [&](const Tricot& e) { return dominates(t.value, e.value); });
  entries_.push_back(std::move(t));
  return true;
}

namespace {

struct Path {
  std::vector<ArcId> arcs;
  Capacity value = 0;
};

// Tricot program for exactly p paths on a network whose arcs leaving s and
// entering t are subdivided and which has only s-t relevant arcs. Returns
// the best family of paths, each ending with its arc into t.
std::vector<Path> exact_tricot(const Network& g, int p, const std::vector<VertexId>& order,
                               const std::vector<std::vector<bool>>& reach) {
  const Digraph& d = g.digraph();
  const VertexId s = g.source();
  const VertexId t = g.sink();
  std::vector<int> rank(static_cast<std::size_t>(d.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto by_rank = [&](VertexId a, VertexId b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; };
  // Endpoint tuples are kept sorted by rank; comparing them as rank vectors
  // gives the lexicographic sweep order.
  auto tuple_less = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), by_rank);
  };
  std::map<std::vector<VertexId>, DominanceSet, decltype(tuple_less)> table(tuple_less);

  const auto first = d.out_arcs(s);
  if (static_cast<int>(first.size()) < p) return {};
  std::vector<int> pick(static_cast<std::size_t>(p));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::pair<VertexId, ArcId>> chosen;
    for (int i : pick) chosen.push_back({d.arc(first[static_cast<std::size_t>(i)]).head, first[static_cast<std::size_t>(i)]});
    std::sort(chosen.begin(), chosen.end(), [&](const auto& a, const auto& b) { return by_rank(a.first, b.first); });
    Tricot tr;
    for (const auto& [v, a] : chosen) {
      tr.endpoints.push_back(v);
      tr.paths.push_back({a});
      tr.value.push_back(g.capacity(a));
    }
    const auto key = tr.endpoints;
    table[key].insert(std::move(tr));
    int i = p - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(first.size()) - p + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  for (auto it = table.begin(); it != table.end(); ++it) {
    const std::vector<VertexId>& w = it->first;
    for (const Tricot& tr : it->second.entries()) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        for (ArcId a : d.out_arcs(w[j])) {
          const VertexId v = d.arc(a).head;
          if (v == t) continue;
          bool blocked = false;
          for (VertexId x : w) blocked = blocked || reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)];
          if (blocked) continue;
          Tricot next = tr;
          next.endpoints[j] = v;
          next.paths[j].push_back(a);
          next.value[j] = std::min(next.value[j], g.capacity(a));
          // Restore rank order: v moved up, so bubble it right.
          for (std::size_t h = j; h + 1 < w.size() && by_rank(next.endpoints[h + 1], next.endpoints[h]); ++h) {
            std::swap(next.endpoints[h], next.endpoints[h + 1]);
            std::swap(next.paths[h], next.paths[h + 1]);
            std::swap(next.value[h], next.value[h + 1]);
          }
#ifndef NDEBUG
          if (!is_tricot(g, next)) throw std::logic_error("tricot extension broke the invariant");
#endif
          const auto key = next.endpoints;
          table[key].insert(std::move(next));
        }
      }
    }
  }

  // Final scan over tuples inside N-(t): larger total, then smaller tuple,
  // then lexicographically larger value.
  const Tricot* best = nullptr;
  for (const auto& [w, set] : table) {
    bool into_t = true;
    for (VertexId v : w) {
      const auto out = d.out_arcs(v);
      into_t = into_t && out.size() == 1 && d.arc(out[0]).head == t;
    }
    if (!into_t) continue;
    for (const Tricot& tr : set.entries()) {
      if (best == nullptr || tr.total() > best->total() ||
          (tr.total() == best->total() && tuple_less(tr.endpoints, best->endpoints)) ||
          (tr.total() == best->total() && tr.endpoints == best->endpoints && tr.value > best->value)) {
        best = &tr;
      }
    }
  }
  std::vector<Path> out;
  if (best == nullptr) return out;
  for (std::size_t i = 0; i < best->paths.size(); ++i) {
    Path path{best->paths[i], best->value[i]};
    path.arcs.push_back(d.out_arcs(best->endpoints[i])[0]);
    out.push_back(std::move(path));
  }
  return out;
}

// Best family of at most p internally vertex-disjoint paths of an acyclic
// network, as ArcIds of `net`, with the smallest p' reaching the best total.
std::vector<Path> best_vertex_disjoint(const Network& net, int p, const TricotOptions& options) {
  if (p < 1) throw InputError("p must be >= 1");
  if (!is_acyclic(net.digraph())) throw PreconditionError("tricot program needs an acyclic network");
  const Network relevant = restrict_arcs(net, st_relevant_arcs(net));
  std::vector<bool> at_ends(static_cast<std::size_t>(relevant.arc_count()));
  for (ArcId a = 0; a < relevant.arc_count(); ++a) {
    at_ends[static_cast<std::size_t>(a)] =
        relevant.arc(a).tail == net.source() || relevant.arc(a).head == net.sink();
  }
  const Subdivision sub = subdivide_arcs(relevant, at_ends);
  const Network& g = sub.network;

  const double n = g.vertex_count();
  const double m = g.arc_count();
  const double estimate = std::exp(std::lgamma(n + m + 1) - std::lgamma(p + 1.0) -
                                   std::lgamma(std::max(1.0, n + m - p + 1))) * std::pow(m, p);
  if (estimate > options.max_estimate) {
    throw BudgetError("tricot program estimate " + std::to_string(estimate) + " exceeds budget " +
                      std::to_string(options.max_estimate));
  }

  // Order: s, then N+(s), then the rest topologically. Vertices of N+(s)
  // are subdivision vertices whose only in-arc comes from s.
  const Digraph& d = g.digraph();
  std::vector<VertexId> order{net.source()};
  std::vector<bool> placed(static_cast<std::size_t>(d.vertex_count()), false);
  placed[static_cast<std::size_t>(net.source())] = true;
  for (ArcId a : d.out_arcs(net.source())) {
    order.push_back(d.arc(a).head);
    placed[static_cast<std::size_t>(d.arc(a).head)] = true;
  }
  const std::vector<VertexId> topo = *topological_order(d);
  for (VertexId v : topo) {
    if (!placed[static_cast<std::size_t>(v)]) order.push_back(v);
  }
  std::vector<std::vector<bool>> reach;
  for (VertexId v = 0; v < d.vertex_count(); ++v) reach.push_back(reachable_from(d, v));

  std::vector<Path> best;
  Capacity best_total = 0;
  for (int q = 1; q <= p; ++q) {
    const std::vector<Path> found = exact_tricot(g, q, order, reach);
    Capacity total = 0;
    for (const Path& path : found) total += path.value;
    if (total > best_total) {
      best_total = total;
      best = found;
    }
  }
  for (Path& path : best) {
    std::vector<ArcId> arcs;
    for (ArcId a : path.arcs) {
      const ArcId r = g.digraph().origin(a);
      const ArcId orig = relevant.digraph().origin(r);
      if (arcs.empty() || arcs.back() != orig) arcs.push_back(orig);
    }
    path.arcs = std::move(arcs);
  }
  return best;
}

PSplitSolution to_solution(const Network& net, const std::vector<Path>& paths) {
  PSplitSolution out;
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  for (const Path& path : paths) {
    FlowComponent comp{ComponentKind::kPath, {net.source()}, path.arcs, path.value};
    for (ArcId a : path.arcs) {
      comp.vertices.push_back(net.arc(a).head);
      x[static_cast<std::size_t>(a)] += path.value;
    }
    out.paths.push_back(std::move(comp));
    out.c.push_back(path.value);
  }
  out.flow = make_flow(net, std::move(x));
  out.p_used = static_cast<int>(paths.size());
  out.i_star = out.p_used;
  return out;
}

}  // namespace

PSplitSolution tricot_dp_exact(const Network& net, int p, const TricotOptions& options) {
  return to_solution(net, best_vertex_disjoint(net, p, options));
}

PSplitSolution arc_disjoint_exact_acyclic(const Network& net, int p, const TricotOptions& options) {
  if (p < 1) throw InputError("p must be >= 1");
  if (!is_acyclic(net.digraph())) throw PreconditionError("tricot program needs an acyclic network");
  std::vector<bool> direct(static_cast<std::size_t>(net.arc_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    direct[static_cast<std::size_t>(a)] = net.arc(a).tail == net.source() && net.arc(a).head == net.sink();
  }
  const Subdivision sub = subdivide_arcs(net, direct);
  const LineNetwork line = line_digraph_network(sub.network);
  std::vector<Path> paths = best_vertex_disjoint(line.network, p, options);
  // A line path s', a_1, ..., a_k, t' is the arc sequence a_1..a_k.
  for (Path& path : paths) {
    std::vector<ArcId> arcs;
    for (ArcId e : path.arcs) {
      const VertexId v = line.network.arc(e).head;
      if (v >= line.original_arc_count) continue;
      const ArcId orig = sub.network.digraph().origin(v);
      if (arcs.empty() || arcs.back() != orig) arcs.push_back(orig);
    }
    path.arcs = std::move(arcs);
  }
  return to_solution(net, paths);
}

}  // namespace flownet
