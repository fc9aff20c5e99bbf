#include "flownet/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("FLOWNET_BUDGET_STATES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v < 1) {
      throw InputError("FLOWNET_BUDGET_STATES must be a positive integer");
    }
    b.max_states = v;
  }
  return b;
}

Budget Budget::gadget() {
  Budget b = from_env();
  b.max_arcs = 400;
  b.max_vertices = 200;
  b.max_cap = 1000;
  b.max_states = std::max<std::int64_t>(b.max_states, 100'000'000);
  return b;
}

void Budget::check(const Network& net) const {
  if (net.arc_count() > max_arcs) {
    throw BudgetError("network has " + std::to_string(net.arc_count()) +
                      " arcs, oracle budget allows " + std::to_string(max_arcs));
  }
  if (net.vertex_count() > max_vertices) {
    throw BudgetError("network has " + std::to_string(net.vertex_count()) +
                      " vertices, oracle budget allows " + std::to_string(max_vertices));
  }
  if (net.max_capacity() > max_cap) {
    throw BudgetError("network capacity " + std::to_string(net.max_capacity()) +
                      " exceeds oracle budget " + std::to_string(max_cap));
  }
}

void StateCounter::tick() {
  if (++count_ > limit_) {
    throw BudgetError("search exceeded " + std::to_string(limit_) + " states");
  }
}

namespace {

// Calls `visit` with every size-k subset of [0, n) as a sorted index list.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Every way to keep `k` arcs out of each over-degree arc group.
std::vector<std::vector<std::vector<ArcId>>> kept_choices(
    const std::vector<std::span<const ArcId>>& groups, int k) {
  std::vector<std::vector<std::vector<ArcId>>> out;
  for (auto group : groups) {
    std::vector<std::vector<ArcId>> options;
    const int d = static_cast<int>(group.size());
    if (d <= k) continue;
    for_each_subset(d, k, [&](const std::vector<int>& idx) {
      std::vector<ArcId> dropped;
      std::size_t j = 0;
      for (int i = 0; i < d; ++i) {
        if (j < idx.size() && idx[j] == i) {
          ++j;
        } else {
          dropped.push_back(group[static_cast<std::size_t>(i)]);
        }
      }
      options.push_back(std::move(dropped));
    });
    out.push_back(std::move(options));
  }
  return out;
}

Capacity max_flow_without(const Network& net, const std::vector<bool>& keep) {
  ResidualGraph g(net.vertex_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    g.add_edge(net.arc(a).tail, net.arc(a).head, keep[static_cast<std::size_t>(a)] ? net.capacity(a) : 0);
  }
  return g.augment(net.source(), net.sink());
}

Capacity max_flow_residual(const Network& net, const std::vector<Capacity>& caps) {
  ResidualGraph g(net.vertex_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    g.add_edge(net.arc(a).tail, net.arc(a).head, caps[static_cast<std::size_t>(a)]);
  }
  return g.augment(net.source(), net.sink());
}

}  // namespace

Capacity oracle_deg_max_flow(const Network& net, int k_out, std::optional<int> k_in,
                             const Budget& budget) {
  budget.check(net);
  if (k_out < 0 || (k_in && *k_in < 0)) throw InputError("degree bounds must be >= 0");
  const Digraph& d = net.digraph();
  std::vector<std::span<const ArcId>> out_groups;
  std::vector<std::span<const ArcId>> in_groups;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    out_groups.push_back(d.out_arcs(v));
    in_groups.push_back(d.in_arcs(v));
  }
  auto choices = kept_choices(out_groups, k_out);
  if (k_in) {
    auto more = kept_choices(in_groups, *k_in);
    choices.insert(choices.end(), more.begin(), more.end());
  }
  StateCounter counter(budget.max_states);
  std::vector<std::size_t> pick(choices.size(), 0);
  Capacity best = 0;
  for (;;) {
    counter.tick();
    std::vector<bool> keep(static_cast<std::size_t>(d.arc_count()), true);
    for (std::size_t g = 0; g < choices.size(); ++g) {
      for (ArcId a : choices[g][pick[g]]) keep[static_cast<std::size_t>(a)] = false;
    }
    best = std::max(best, max_flow_without(net, keep));
    std::size_t g = 0;
    while (g < choices.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
    if (g == choices.size()) break;
  }
  return best;
}

std::vector<std::vector<ArcId>> simple_paths(const Network& net, StateCounter& counter) {
  const Digraph& d = net.digraph();
  std::vector<std::vector<ArcId>> out;
  std::vector<bool> on(static_cast<std::size_t>(d.vertex_count()), false);
  std::vector<ArcId> path;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    counter.tick();
    if (v == net.sink()) {
      out.push_back(path);
      return;
    }
    on[static_cast<std::size_t>(v)] = true;
    for (ArcId a : d.out_arcs(v)) {
      const VertexId w = d.arc(a).head;
      if (on[static_cast<std::size_t>(w)]) continue;
      path.push_back(a);
      self(self, w);
      path.pop_back();
    }
    on[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, net.source());
  return out;
}

namespace {

Capacity bottleneck(const std::vector<Capacity>& caps, const std::vector<ArcId>& path) {
  Capacity m = std::numeric_limits<Capacity>::max();
  for (ArcId a : path) m = std::min(m, caps[static_cast<std::size_t>(a)]);
  return m;
}

// Path set search with shared capacities (unrestricted variant).
struct SharedSearch {
  const Network& net;
  const std::vector<std::vector<ArcId>>& paths;
  StateCounter& counter;
  std::vector<Capacity> residual;
  Capacity best = 0;

  void run(std::size_t start, int slots, Capacity value) {
    counter.tick();
    best = std::max(best, value);
    if (slots == 0) return;
    Capacity widest = 0;
    for (std::size_t i = start; i < paths.size(); ++i) widest = std::max(widest, bottleneck(residual, paths[i]));
    if (widest == 0 || value + slots * widest <= best) return;
    if (value + max_flow_residual(net, residual) <= best) return;
    for (std::size_t i = start; i < paths.size(); ++i) {
      const Capacity room = bottleneck(residual, paths[i]);
      for (Capacity v = room; v >= 1; --v) {
        for (ArcId a : paths[i]) residual[static_cast<std::size_t>(a)] -= v;
        run(i + 1, slots - 1, value + v);
        for (ArcId a : paths[i]) residual[static_cast<std::size_t>(a)] += v;
      }
    }
  }
};

// Pairwise compatible path sets, each path carrying its bottleneck.
struct DisjointSearch {
  const std::vector<Capacity>& values;
  const std::vector<std::vector<std::uint64_t>>& masks;
  StateCounter& counter;
  std::vector<std::uint64_t> used;
  Capacity best = 0;

  bool compatible(std::size_t i) const {
    for (std::size_t w = 0; w < used.size(); ++w) {
      if (used[w] & masks[i][w]) return false;
    }
    return true;
  }

  void run(std::size_t start, int slots, Capacity value) {
    counter.tick();
    best = std::max(best, value);
    if (slots == 0) return;
    Capacity widest = 0;
    for (std::size_t i = start; i < values.size(); ++i) {
      if (compatible(i)) widest = std::max(widest, values[i]);
    }
    if (widest == 0 || value + slots * widest <= best) return;
    for (std::size_t i = start; i < values.size(); ++i) {
      if (!compatible(i)) continue;
      for (std::size_t w = 0; w < used.size(); ++w) used[w] |= masks[i][w];
      run(i + 1, slots - 1, value + values[i]);
      for (std::size_t w = 0; w < used.size(); ++w) used[w] &= ~masks[i][w];
    }
  }
};

std::vector<std::uint64_t> bitmask(std::size_t size, const std::vector<int>& members) {
  std::vector<std::uint64_t> m((size + 63) / 64, 0);
  for (int i : members) m[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  return m;
}

std::vector<int> internal_vertices(const Network& net, const std::vector<ArcId>& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(net.arc(path[i]).head);
  return out;
}

}  // namespace

Capacity oracle_p_split(const Network& net, int p, SplitVariant variant,
                        const Budget& budget) {
  budget.check(net);
  if (p < 1) throw InputError("p must be >= 1");
  StateCounter counter(budget.max_states);
  const auto paths = simple_paths(net, counter);
  const std::vector<Capacity> caps(net.capacities().begin(), net.capacities().end());
  if (variant == SplitVariant::kUnrestricted) {
    SharedSearch search{net, paths, counter, caps};
    search.run(0, p, 0);
    return search.best;
  }
  std::vector<Capacity> values;
  std::vector<std::vector<std::uint64_t>> masks;
  const std::size_t universe = variant == SplitVariant::kArcDisjoint
                                   ? static_cast<std::size_t>(net.arc_count())
                                   : static_cast<std::size_t>(net.vertex_count());
  for (const auto& path : paths) {
    values.push_back(bottleneck(caps, path));
    if (variant == SplitVariant::kArcDisjoint) {
      masks.push_back(bitmask(universe, std::vector<int>(path.begin(), path.end())));
    } else {
      masks.push_back(bitmask(universe, internal_vertices(net, path)));
    }
  }
  DisjointSearch search{values, masks, counter,
                        std::vector<std::uint64_t>((universe + 63) / 64, 0)};
  search.run(0, p, 0);
  return search.best;
}

namespace {

struct SeparableSearch {
  const Network& net;
  const std::vector<std::vector<ArcId>>& paths;
  const std::vector<std::vector<int>>& members;  // vertices or arcs per path
  int q;
  StateCounter& counter;
  std::vector<Capacity> residual;
  std::vector<int> usage;
  Capacity best = 0;

  bool admissible(std::size_t i) const {
    for (int x : members[i]) {
      if (usage[static_cast<std::size_t>(x)] >= q) return false;
    }
    return true;
  }

  void run(std::size_t start, Capacity value) {
    counter.tick();
    best = std::max(best, value);
    if (value + max_flow_residual(net, residual) <= best) return;
    for (std::size_t i = start; i < paths.size(); ++i) {
      if (!admissible(i)) continue;
      const Capacity room = bottleneck(residual, paths[i]);
      if (room == 0) continue;
      for (int x : members[i]) ++usage[static_cast<std::size_t>(x)];
      for (Capacity v = room; v >= 1; --v) {
        for (ArcId a : paths[i]) residual[static_cast<std::size_t>(a)] -= v;
        run(i + 1, value + v);
        for (ArcId a : paths[i]) residual[static_cast<std::size_t>(a)] += v;
      }
      for (int x : members[i]) --usage[static_cast<std::size_t>(x)];
    }
  }
};

}  // namespace

Capacity oracle_q_separable(const Network& net, int q, SeparableMode mode,
                            const Budget& budget) {
  budget.check(net);
  if (q < 1) throw InputError("q must be >= 1");
  StateCounter counter(budget.max_states);
  const auto paths = simple_paths(net, counter);
  std::vector<std::vector<int>> members;
  for (const auto& path : paths) {
    members.push_back(mode == SeparableMode::kVertex ? internal_vertices(net, path)
                                                     : std::vector<int>(path.begin(), path.end()));
  }
  const std::size_t universe = mode == SeparableMode::kVertex
                                   ? static_cast<std::size_t>(net.vertex_count())
                                   : static_cast<std::size_t>(net.arc_count());
  SeparableSearch search{net, paths, members, q, counter,
                         std::vector<Capacity>(net.capacities().begin(), net.capacities().end()),
                         std::vector<int>(universe, 0)};
  search.run(0, 0);
  return search.best;
}

namespace {

// Whether some flow of value `target` agrees with the first `fixed` values of
// `x` on arcs [0, fixed).
bool extendable(const Network& net, const std::vector<Capacity>& x, ArcId fixed,
                Capacity target) {
  const VertexId n = net.vertex_count();
  std::vector<Capacity> supply(static_cast<std::size_t>(n), 0);
  for (ArcId a = 0; a < fixed; ++a) {
    supply[static_cast<std::size_t>(net.arc(a).head)] += x[static_cast<std::size_t>(a)];
    supply[static_cast<std::size_t>(net.arc(a).tail)] -= x[static_cast<std::size_t>(a)];
  }
  supply[static_cast<std::size_t>(net.source())] += target;
  supply[static_cast<std::size_t>(net.sink())] -= target;
  ResidualGraph g(n + 2);
  const VertexId super_s = n;
  const VertexId super_t = n + 1;
  for (ArcId a = fixed; a < net.arc_count(); ++a) {
    g.add_edge(net.arc(a).tail, net.arc(a).head, net.capacity(a));
  }
  Capacity need = 0;
  for (VertexId v = 0; v < n; ++v) {
    const Capacity b = supply[static_cast<std::size_t>(v)];
    if (b > 0) {
      g.add_edge(super_s, v, b);
      need += b;
    } else if (b < 0) {
      g.add_edge(v, super_t, -b);
    }
  }
  return g.augment(super_s, super_t) == need;
}

}  // namespace

std::int64_t enumerate_max_flows(const Network& net,
                                 const std::function<void(const Flow&)>& visit,
                                 const Budget& budget) {
  budget.check(net);
  const Capacity target = max_flow(net).value;
  StateCounter counter(budget.max_states);
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
  std::int64_t count = 0;
  auto branch = [&](auto&& self, ArcId a) -> void {
    counter.tick();
    if (a == net.arc_count()) {
      ++count;
      visit(Flow{x, target});
      return;
    }
    for (Capacity v = 0; v <= net.capacity(a); ++v) {
      x[static_cast<std::size_t>(a)] = v;
      if (extendable(net, x, a + 1, target)) self(self, a + 1);
    }
    x[static_cast<std::size_t>(a)] = 0;
  };
  branch(branch, 0);
  return count;
}

bool max_flow_is_unique(const Network& net) {
  ResidualGraph g(net.vertex_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    g.add_edge(net.arc(a).tail, net.arc(a).head, net.capacity(a));
  }
  g.augment(net.source(), net.sink());
  // Residual edge e = (u, v) lies on a non-trivial cycle iff u is reachable
  // from v without using e's own reverse edge.
  for (int e = 0; e < 2 * net.arc_count(); ++e) {
    if (g.residual(e) <= 0) continue;
    const ArcId a = e / 2;
    const VertexId u = (e % 2 == 0) ? net.arc(a).tail : net.arc(a).head;
    const VertexId v = (e % 2 == 0) ? net.arc(a).head : net.arc(a).tail;
    ResidualGraph h(net.vertex_count());
    for (int f = 0; f < 2 * net.arc_count(); ++f) {
      if (f == (e ^ 1) || g.residual(f) <= 0) continue;
      const ArcId b = f / 2;
      const VertexId tail = (f % 2 == 0) ? net.arc(b).tail : net.arc(b).head;
      const VertexId head = (f % 2 == 0) ? net.arc(b).head : net.arc(b).tail;
      h.add_edge(tail, head, 1);
    }
    if (h.reachable(v)[static_cast<std::size_t>(u)]) return false;
  }
  return true;
}

bool sat_bruteforce(const CnfFormula& f) {
  f.validate();
  if (f.variable_count > 20) throw BudgetError("sat_bruteforce handles at most 20 variables");
  std::vector<bool> assignment(static_cast<std::size_t>(f.variable_count) + 1, false);
  for (std::uint32_t mask = 0; mask < (1u << f.variable_count); ++mask) {
    for (int i = 1; i <= f.variable_count; ++i) assignment[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
    if (f.satisfied_by(assignment)) return true;
  }
  return false;
}

}  // namespace flownet
