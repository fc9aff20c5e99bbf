#include "flownet/random.hpp"

#include <algorithm>
#include <deque>

#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"

namespace flownet {

namespace {

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

Network random_network(std::mt19937_64& rng, const RandomNetworkOptions& options) {
  const VertexId n = uniform<VertexId>(rng, std::max<VertexId>(2, options.min_vertices),
                                       std::max<VertexId>(2, options.max_vertices));
  const ArcId m = uniform<ArcId>(rng, options.min_arcs, options.max_arcs);
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  while (static_cast<ArcId>(arcs.size()) < m) {
    VertexId u = uniform<VertexId>(rng, 0, n - 1);
    VertexId v = uniform<VertexId>(rng, 0, n - 1);
    if (u == v) continue;
    if (options.acyclic && u > v) std::swap(u, v);
    arcs.push_back({u, v});
    caps.push_back(options.unit ? 1 : uniform<Capacity>(rng, 1, options.max_capacity));
  }
  return Network(Digraph(n, std::move(arcs)), 0, n - 1, std::move(caps));
}

Network random_network(std::uint64_t seed, const RandomNetworkOptions& options) {
  std::mt19937_64 rng(seed);
  return random_network(rng, options);
}

Flow random_flow(std::mt19937_64& rng, const Network& net) {
  const Digraph& d = net.digraph();
  ResidualGraph g(net.vertex_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    g.add_edge(d.arc(a).tail, d.arc(a).head, uniform<Capacity>(rng, 0, net.capacity(a)));
  }
  g.augment(net.source(), net.sink());
  std::vector<Capacity> x(static_cast<std::size_t>(net.arc_count()));
  for (ArcId a = 0; a < net.arc_count(); ++a) x[static_cast<std::size_t>(a)] = g.flow_on(2 * a);

  // Push extra units around cycles through slack arcs.
  const int attempts = uniform<int>(rng, 0, 3);
  for (int i = 0; i < attempts && net.arc_count() > 0; ++i) {
    const ArcId a = uniform<ArcId>(rng, 0, net.arc_count() - 1);
    std::vector<bool> slack(static_cast<std::size_t>(net.arc_count()));
    for (ArcId b = 0; b < net.arc_count(); ++b) {
      slack[static_cast<std::size_t>(b)] = x[static_cast<std::size_t>(b)] < net.capacity(b) && b != a;
    }
    if (x[static_cast<std::size_t>(a)] == net.capacity(a)) continue;
    std::vector<ArcId> back = bfs_path(d, d.arc(a).head, d.arc(a).tail, slack);
    if (back.empty()) continue;
    back.push_back(a);
    Capacity room = net.capacity(a);
    for (ArcId b : back) room = std::min(room, net.capacity(b) - x[static_cast<std::size_t>(b)]);
    const Capacity add = uniform<Capacity>(rng, 1, room);
    for (ArcId b : back) x[static_cast<std::size_t>(b)] += add;
  }
  return make_flow(net, std::move(x));
}

CnfFormula random_cnf(std::mt19937_64& rng, int n, int m) {
  if (n < 1 || m < 0) throw InputError("random formula needs n >= 1 and m >= 0");
  CnfFormula f;
  f.variable_count = n;
  for (int j = 0; j < m; ++j) {
    Clause c;
    for (Literal& l : c) l = uniform<int>(rng, 1, n) * (uniform<int>(rng, 0, 1) == 0 ? 1 : -1);
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace flownet
