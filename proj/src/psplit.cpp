#include "flownet/psplit.hpp"

#include <algorithm>
#include <numeric>

#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

Rational harmonic(int p) {
  if (p < 1) throw InputError("harmonic number needs p >= 1");
  Rational h{0, 1};
  for (std::int64_t i = 1; i <= p; ++i) {
    // h + 1/i = (h.num * i + h.den) / (h.den * i)
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (__builtin_mul_overflow(h.num, i, &num) || __builtin_add_overflow(num, h.den, &num) ||
        __builtin_mul_overflow(h.den, i, &den)) {
      throw InputError("harmonic number too large");
    }
    const std::int64_t g = std::gcd(num, den);
    h = {num / g, den / g};
  }
  return h;
}

bool within_harmonic_bound(Capacity value, Capacity optimum, int p) {
  const Rational h = harmonic(p);
  return static_cast<__int128>(h.num) * value >= static_cast<__int128>(h.den) * optimum;
}

namespace {

// Network behind D_nu: kept arcs with their copy count as capacity (unit for
// the disjoint variants); arc j of the result copies ids[j].
Network nu_network(const Network& net, Capacity nu, SplitVariant variant, std::vector<ArcId>& ids) {
  std::vector<Arc> list;
  std::vector<Capacity> caps;
  ids.clear();
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (net.capacity(a) < nu) continue;
    list.push_back(net.arc(a));
    caps.push_back(variant == SplitVariant::kUnrestricted ? net.capacity(a) / nu : 1);
    ids.push_back(a);
  }
  return Network(Digraph(net.vertex_count(), std::move(list), ids), net.source(), net.sink(),
                 std::move(caps));
}

// Up to i unit paths in D_nu, as flow on the nu network.
Flow disjoint_unit_flow(const Network& dnu, int i, SplitVariant variant) {
  if (variant != SplitVariant::kVertexDisjoint) return max_flow(dnu, i);
  const std::vector<VertexId> exclude{dnu.source(), dnu.sink()};
  const SplitNetwork split = split_vertices(dnu, 1, exclude);
  return unsplit_flow(split, dnu, max_flow(split.network, i));
}

}  // namespace

Digraph build_D_nu(const Network& net, Capacity nu, SplitVariant variant) {
  if (nu < 1) throw InputError("nu must be >= 1");
  std::vector<Arc> list;
  std::vector<ArcId> origin;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (net.capacity(a) < nu) continue;
    const Capacity copies = variant == SplitVariant::kUnrestricted ? net.capacity(a) / nu : 1;
    for (Capacity j = 0; j < copies; ++j) {
      list.push_back(net.arc(a));
      origin.push_back(a);
    }
  }
  return Digraph(net.vertex_count(), std::move(list), std::move(origin));
}

bool has_disjoint_paths(const Network& net, Capacity nu, int i, SplitVariant variant) {
  if (nu < 1 || i < 1) throw InputError("nu and i must be >= 1");
  std::vector<ArcId> ids;
  return disjoint_unit_flow(nu_network(net, nu, variant, ids), i, variant).value >= i;
}

PSplitSolution approx_p_split(const Network& net, int p, SplitVariant variant) {
  if (p < 1) throw InputError("p must be >= 1");
  Capacity c_max = 0;
  for (Capacity c : net.capacities()) c_max = std::max(c_max, c);

  PSplitSolution best;
  best.flow = zero_flow(net);
  for (int i = 1; i <= p; ++i) {
    Capacity lo = 0;  // largest known feasible nu (0: none)
    Capacity hi = c_max + 1;  // smallest known infeasible nu
    while (hi - lo > 1) {
      const Capacity mid = lo + (hi - lo) / 2;
      if (has_disjoint_paths(net, mid, i, variant)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    best.c.push_back(lo);
    if (lo == 0 || static_cast<__int128>(i) * lo <= static_cast<__int128>(best.i_star) * best.nu_star) {
      continue;
    }
    std::vector<ArcId> ids;
    const Network dnu = nu_network(net, lo, variant, ids);
    const Flow unit = acyclify(dnu, disjoint_unit_flow(dnu, i, variant));
    std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()), 0);
    std::vector<FlowComponent> paths;
    for (const FlowComponent& comp : decompose(dnu, unit).components) {
      if (comp.kind != ComponentKind::kPath) continue;
      FlowComponent path{ComponentKind::kPath, comp.vertices, {}, lo};
      for (ArcId a : comp.arcs) path.arcs.push_back(ids[static_cast<std::size_t>(a)]);
      for (Capacity copy = 0; copy < comp.value && static_cast<int>(paths.size()) < i; ++copy) {
        for (ArcId a : path.arcs) x[static_cast<std::size_t>(a)] += lo;
        paths.push_back(path);
      }
    }
    best.flow = make_flow(net, std::move(x));
    best.paths = std::move(paths);
    best.p_used = i;
    best.i_star = i;
    best.nu_star = lo;
  }
  return best;
}

}  // namespace flownet
