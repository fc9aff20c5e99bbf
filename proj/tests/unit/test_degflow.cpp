#include <random>

#include "doctest.h"
#include "flownet/degflow.hpp"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/oracle.hpp"
#include "flownet/random.hpp"
#include "test_util.hpp"

using namespace flownet;
using flownet::testing::brute_widest;
using flownet::testing::make_net;

TEST_CASE("widest path examples") {
  CHECK(widest_path(make_net(4, {{0, 1, 3}, {1, 3, 3}, {0, 2, 1}, {2, 3, 1}})).value == 3);
  CHECK(widest_path(make_net(3, {{0, 1, 2}, {1, 2, 7}})).value == 2);
  const WidestPath none = widest_path(make_net(3, {{0, 1, 2}}));
  CHECK(none.value == 0);
  CHECK(none.arcs.empty());
}

TEST_CASE("widest path on the lambda counterexample at 3") {
  // s=0, u1=1, v1=2, y=3, z=4, t=5; only s->z and y->t have capacity 2.
  const Network net = make_net(6, {{0, 1, 1}, {1, 2, 1}, {2, 5, 1}, {0, 3, 1}, {3, 5, 2},
                                   {0, 4, 2}, {4, 5, 1}, {1, 3, 1}, {4, 2, 1}});
  // Every s-t path uses a unit arc: s->y, z->t, or the u/v arcs.
  CHECK(brute_widest(net) == 1);
  CHECK(widest_path(net).value == 1);
}

TEST_CASE("widest path matches enumeration and the degree-1 oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Network net = random_network(rng);
    const WidestPath w = widest_path(net);
    CHECK(w.value == brute_widest(net));
    CHECK(w.value == oracle_deg_max_flow(net, 1));
    if (w.value > 0) {
      const Flow f = widest_path_flow(net);
      CHECK(f.value == w.value);
      CHECK(support_out_degree(net, f) <= 1);
    }
  }
}

TEST_CASE("unit capacity degree-bounded max flow") {
  const Network star = make_net(5, {{0, 1, 1}, {1, 4, 1}, {0, 2, 1}, {2, 4, 1}, {0, 3, 1}, {3, 4, 1}});
  CHECK(unit_capacity_deg_max_flow(star, 2).value == 2);
  CHECK(unit_capacity_deg_max_flow(star, 3).value == 3);
  CHECK_THROWS_AS(unit_capacity_deg_max_flow(make_net(2, {{0, 1, 2}}), 1), PreconditionError);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Network net = random_network(rng, {.max_arcs = 12, .unit = true});
    for (int k = 1; k <= 3; ++k) {
      const Flow f = unit_capacity_deg_max_flow(net, k);
      CHECK(is_valid_flow(net, f));
      CHECK(support_out_degree(net, f) <= k);
      CHECK(f.value == oracle_deg_max_flow(net, k));
      const std::vector<VertexId> exclude{net.sink()};
      CHECK(max_flow(split_vertices(net, k, exclude).network).value == oracle_deg_max_flow(net, k));
    }
  }
}

TEST_CASE("vertex separators") {
  CHECK(st_vertex_separators(Digraph(3, {{0, 1}, {1, 2}}), 0, 2) == std::vector<VertexId>{1});
  CHECK(st_vertex_separators(Digraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3).empty());
  // s=0, a=1, b=2, t=3: s->a->b->t plus a->t.
  CHECK(st_vertex_separators(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}), 0, 3) ==
        std::vector<VertexId>{1});
  CHECK_THROWS_AS(st_vertex_separators(Digraph(3, {{0, 1}}), 0, 2), PreconditionError);
}

TEST_CASE("separator chain covers the relevant arcs once") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const Network net = random_network(rng);
    if (max_flow(net).value == 0) continue;
    const SeparatorChain chain = separator_chain(net);
    std::vector<int> seen(static_cast<std::size_t>(net.arc_count()), 0);
    for (const auto& arcs : chain.block_arcs) {
      for (ArcId a : arcs) ++seen[static_cast<std::size_t>(a)];
    }
    for (int c : seen) CHECK(c <= 1);
  }
}

TEST_CASE("value k+1 decision examples") {
  const auto single = deg_flow_value_k_plus_1(make_net(2, {{0, 1, 3}}), 2);
  REQUIRE(single.has_value());
  CHECK(single->value == 3);
  const Network three = make_net(5, {{0, 1, 1}, {1, 4, 1}, {0, 2, 1}, {2, 4, 1}, {0, 3, 1}, {3, 4, 1}});
  CHECK_FALSE(deg_flow_value_k_plus_1(three, 2).has_value());
}

TEST_CASE("value k+1 decision agrees with the oracle") {
  std::mt19937_64 rng(47);
  int positives = 0;
  for (int i = 0; i < 400; ++i) {
    const Network net = random_network(rng);
    for (int k = 1; k <= 3; ++k) {
      const auto got = deg_flow_value_k_plus_1(net, k);
      const bool expected = oracle_deg_max_flow(net, k) >= k + 1;
      CHECK(got.has_value() == expected);
      if (got) {
        ++positives;
        CHECK(is_valid_flow(net, *got));
        CHECK(got->value == k + 1);
        CHECK(support_out_degree(net, *got) <= k);
      }
    }
  }
  CHECK(positives > 50);
}
