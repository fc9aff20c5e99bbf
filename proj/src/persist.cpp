#include "flownet/persist.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

namespace {

// Calls visit(subset) for every r-subset of `items` in lexicographic order
// of positions; stops early when visit returns true.
template <typename T, typename Visit>
void for_each_subset(const std::vector<T>& items, int r, StateCounter& counter, Visit visit) {
  const int n = static_cast<int>(items.size());
  if (r > n) return;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<T> subset(static_cast<std::size_t>(r));
  while (true) {
    counter.tick();
    for (int i = 0; i < r; ++i) subset[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    if (visit(subset)) return;
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Max-flow value over arcs with keep[a], capacities c.
Capacity value_on(const Network& net, const std::vector<bool>& keep) {
  return max_flow(restrict_arcs(net, keep)).value;
}

std::vector<bool> support_mask(const Network& net, const Flow& x) {
  std::vector<bool> keep(static_cast<std::size_t>(net.arc_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) keep[static_cast<std::size_t>(a)] = x.x[static_cast<std::size_t>(a)] > 0;
  return keep;
}

void check_k(int k) {
  if (k < 0) throw InputError("k must be >= 0");
}

}  // namespace

PersistenceReport persistence_value(const Network& net, const Flow& x, int k, const Budget& budget) {
  check_k(k);
  validate_flow(net, x);
  std::vector<bool> in_cut(static_cast<std::size_t>(net.arc_count()), false);
  for (ArcId a : mincut_arcs(net)) in_cut[static_cast<std::size_t>(a)] = true;
  std::vector<ArcId> eligible;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (!in_cut[static_cast<std::size_t>(a)]) eligible.push_back(a);
  }
  PersistenceReport report{x, k, {}, x.value};
  const std::vector<bool> base = support_mask(net, x);
  const int r = std::min<int>(k, static_cast<int>(eligible.size()));
  if (r == 0) return report;
  bool first = true;
  StateCounter counter(budget.max_states);
  for_each_subset(eligible, r, counter, [&](const std::vector<ArcId>& subset) {
    std::vector<bool> keep = base;
    for (ArcId a : subset) keep[static_cast<std::size_t>(a)] = false;
    const Capacity v = value_on(net, keep);
    if (first || v < report.residual_value) {
      report.residual_value = v;
      report.worst_set = subset;
      first = false;
    }
    return v == 0;
  });
  return report;
}

PersistenceReport best_persistent_max_flow_bruteforce(const Network& net, int k, const Budget& budget) {
  check_k(k);
  budget.check(net);
  std::optional<PersistenceReport> best;
  enumerate_max_flows(
      net,
      [&](const Flow& f) {
        PersistenceReport r = persistence_value(net, f, k, budget);
        if (!best || r.residual_value > best->residual_value) best = std::move(r);
      },
      budget);
  return *best;
}

std::vector<VertexId> mincut_vertices(const Network& net) {
  std::set<VertexId> out;
  for (ArcId a : mincut_arcs(net)) {
    out.insert(net.arc(a).tail);
    out.insert(net.arc(a).head);
  }
  return {out.begin(), out.end()};
}

VertexPersistenceReport vertex_persistence_value(const Network& net, const Flow& x, int k,
                                                 const Budget& budget) {
  check_k(k);
  validate_flow(net, x);
  const std::vector<VertexId> cut = mincut_vertices(net);
  std::vector<VertexId> eligible;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (!std::binary_search(cut.begin(), cut.end(), v)) eligible.push_back(v);
  }
  VertexPersistenceReport report{x, k, {}, x.value};
  const std::vector<bool> base = support_mask(net, x);
  const int r = std::min<int>(k, static_cast<int>(eligible.size()));
  if (r == 0) return report;
  bool first = true;
  StateCounter counter(budget.max_states);
  for_each_subset(eligible, r, counter, [&](const std::vector<VertexId>& subset) {
    std::vector<bool> keep = base;
    for (VertexId v : subset) {
      for (ArcId a : net.digraph().out_arcs(v)) keep[static_cast<std::size_t>(a)] = false;
      for (ArcId a : net.digraph().in_arcs(v)) keep[static_cast<std::size_t>(a)] = false;
    }
    const Capacity v = value_on(net, keep);
    if (first || v < report.residual_value) {
      report.residual_value = v;
      report.worst_set = subset;
      first = false;
    }
    return v == 0;
  });
  return report;
}

VertexPersistenceReport best_vertex_persistent_max_flow_bruteforce(const Network& net, int k,
                                                                   const Budget& budget) {
  check_k(k);
  budget.check(net);
  std::optional<VertexPersistenceReport> best;
  enumerate_max_flows(
      net,
      [&](const Flow& f) {
        VertexPersistenceReport r = vertex_persistence_value(net, f, k, budget);
        if (!best || r.residual_value > best->residual_value) best = std::move(r);
      },
      budget);
  return *best;
}

ThresholdReport min_deletions_below(const Network& net, Capacity K, const Budget& budget) {
  if (K < 1) throw InputError("K must be >= 1");
  ThresholdReport report;
  const std::vector<bool> all(static_cast<std::size_t>(net.arc_count()), true);
  if (value_on(net, all) < K) return report;
  std::vector<ArcId> arcs(static_cast<std::size_t>(net.arc_count()));
  std::iota(arcs.begin(), arcs.end(), 0);
  StateCounter counter(budget.max_states);
  for (int r = 1; r <= net.arc_count(); ++r) {
    bool found = false;
    for_each_subset(arcs, r, counter, [&](const std::vector<ArcId>& subset) {
      std::vector<bool> keep = all;
      for (ArcId a : subset) keep[static_cast<std::size_t>(a)] = false;
      if (value_on(net, keep) >= K) return false;
      report = {r, subset};
      found = true;
      return true;
    });
    if (found) return report;
  }
  throw std::logic_error("deleting every arc must drop the value to 0");
}

}  // namespace flownet
