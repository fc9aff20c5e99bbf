#include <random>

#include "doctest.h"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/persist.hpp"
#include "flownet/random.hpp"
#include "test_util.hpp"

using namespace flownet;
using flownet::testing::make_net;

namespace {

// s=0 -> a=1 cap 2; a -> t=2 with caps 1 and 5.
Network split_net() { return make_net(3, {{0, 1, 2}, {1, 2, 1}, {1, 2, 5}}); }

}  // namespace

TEST_CASE("persistence examples") {
  const Network net = split_net();
  CHECK(mincut_arcs(net) == std::vector<ArcId>{0});
  const Flow even = make_flow(net, {2, 1, 1});
  CHECK(persistence_value(net, even, 0).residual_value == 2);
  const PersistenceReport r = persistence_value(net, even, 1);
  CHECK(r.residual_value == 1);
  CHECK(r.worst_set == std::vector<ArcId>{2});
  const Flow wide = make_flow(net, {2, 0, 2});
  CHECK(persistence_value(net, wide, 1).residual_value == 0);
  CHECK_THROWS_AS(persistence_value(net, even, -1), InputError);
}

TEST_CASE("best persistent flow") {
  const PersistenceReport best = best_persistent_max_flow_bruteforce(split_net(), 1);
  CHECK(best.flow.x == std::vector<Capacity>{2, 1, 1});
  CHECK(best.residual_value == 1);

  // Single path: every arc is in a minimum cut.
  const Network path = make_net(3, {{0, 1, 2}, {1, 2, 2}});
  const PersistenceReport p = best_persistent_max_flow_bruteforce(path, 1);
  CHECK(p.worst_set.empty());
  CHECK(p.residual_value == 2);

  const Network two = make_net(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  const PersistenceReport t = best_persistent_max_flow_bruteforce(two, 1);
  CHECK(t.worst_set.empty());
  CHECK(t.residual_value == 2);

  CHECK_THROWS_AS(best_persistent_max_flow_bruteforce(make_net(2, {{0, 1, 9}}), 1), BudgetError);
}

TEST_CASE("persistence properties on random nets") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 150; ++i) {
    const Network net = random_network(rng, {.max_arcs = 10, .max_capacity = 3});
    const Capacity c_max = net.max_capacity();
    Capacity best_seen = -1;
    std::int64_t flows = 0;
    enumerate_max_flows(net, [&](const Flow& f) {
      ++flows;
      Capacity prev = f.value;
      for (int k = 0; k <= 3; ++k) {
        const PersistenceReport r = persistence_value(net, f, k);
        CHECK(r.residual_value <= prev);
        CHECK(r.residual_value >= f.value - k * c_max);
        CHECK(static_cast<int>(r.worst_set.size()) <= k);
        prev = r.residual_value;
      }
      best_seen = std::max(best_seen, persistence_value(net, f, 1).residual_value);
    });
    CHECK(flows >= 1);
    CHECK(best_persistent_max_flow_bruteforce(net, 1).residual_value == best_seen);
  }
}

TEST_CASE("vertex persistence") {
  // s=0 -> {1, 2} -> 3 -> t=4 with the route through 2 of capacity 1; only
  // 3->t (cap 2) is in a min cut, so V_mincut = {3, 4}.
  const Network net = make_net(5, {{0, 1, 2}, {0, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 4, 2}});
  CHECK(mincut_vertices(net) == std::vector<VertexId>{3, 4});
  const Flow one = make_flow(net, {2, 0, 2, 0, 2});
  const Flow both = make_flow(net, {1, 1, 1, 1, 2});
  CHECK(vertex_persistence_value(net, one, 1).residual_value == 0);
  CHECK(vertex_persistence_value(net, both, 1).residual_value == 1);
  const VertexPersistenceReport best = best_vertex_persistent_max_flow_bruteforce(net, 1);
  CHECK(best.residual_value == 1);
  CHECK(vertex_persistence_value(net, both, 2).residual_value == 0);
}

TEST_CASE("deletions below a threshold") {
  // K = 1 asks for the arc connectivity.
  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    const Network net = random_network(rng, {.max_arcs = 9});
    const ThresholdReport r = min_deletions_below(net, 1);
    CHECK(r.deletions == arc_connectivity(net.digraph(), net.source(), net.sink()));
    CHECK(static_cast<int>(r.arcs.size()) == r.deletions);
  }
  // Unit capacities: max flow - K + 1.
  for (int i = 0; i < 100; ++i) {
    const Network net = random_network(rng, {.max_arcs = 9, .unit = true});
    const Capacity f = max_flow(net).value;
    for (Capacity K = 1; K <= f; ++K) CHECK(min_deletions_below(net, K).deletions == f - K + 1);
    CHECK(min_deletions_below(net, f + 1).deletions == 0);
  }
  CHECK_THROWS_AS(min_deletions_below(split_net(), 0), InputError);
}
