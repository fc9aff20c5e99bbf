#include <random>

#include "doctest.h"
#include "flownet/error.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/random.hpp"
#include "test_util.hpp"

using namespace flownet;
using flownet::testing::brute_min_cut;
using flownet::testing::brute_mincut_arcs;
using flownet::testing::make_net;

TEST_CASE("max flow examples") {
  CHECK(max_flow(make_net(2, {{0, 1, 5}})).value == 5);
  CHECK(max_flow(make_net(4, {{0, 1, 3}, {1, 3, 3}, {0, 2, 1}, {2, 3, 1}})).value == 4);
  CHECK(max_flow(make_net(3, {{0, 1, 3}})).value == 0);
}

TEST_CASE("max flow respects the value limit") {
  const Network net = make_net(2, {{0, 1, 5}, {0, 1, 5}});
  const Flow f = max_flow(net, 7);
  CHECK(f.value == 7);
  CHECK(is_valid_flow(net, f));
}

TEST_CASE("min cut examples") {
  const Cut single = min_cut(make_net(2, {{0, 1, 5}}));
  CHECK(single.x == std::vector<VertexId>{0});
  CHECK(single.capacity == 5);
  const Cut series = min_cut(make_net(3, {{0, 1, 2}, {1, 2, 7}}));
  CHECK(series.capacity == 2);
  CHECK(series.arcs_across == std::vector<ArcId>{0});
}

TEST_CASE("strong duality against cut enumeration") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Network net = random_network(rng, {.max_vertices = 8, .max_arcs = 16});
    const Flow f = max_flow(net);
    REQUIRE(is_valid_flow(net, f));
    const Cut cut = min_cut(net);
    CHECK(f.value == cut.capacity);
    CHECK(f.value == brute_min_cut(net));
    CHECK(cut.in_x[static_cast<std::size_t>(net.source())]);
    CHECK_FALSE(cut.in_x[static_cast<std::size_t>(net.sink())]);
  }
}

TEST_CASE("arc connectivity") {
  CHECK(arc_connectivity(Digraph(3, {{0, 1}}), 0, 2) == 0);
  CHECK(arc_connectivity(Digraph(2, {{0, 1}, {0, 1}}), 0, 1) == 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Network net = random_network(rng);
    const Network unit = unit_network(net.digraph(), net.source(), net.sink());
    CHECK(arc_connectivity(net.digraph(), net.source(), net.sink()) == brute_min_cut(unit));
  }
}

TEST_CASE("vertex splitting") {
  SUBCASE("path s-a-t with bound 2") {
    const Network net = make_net(3, {{0, 1, 5}, {1, 2, 5}});
    const std::vector<VertexId> exclude{0, 2};
    const SplitNetwork split = split_vertices(net, 2, exclude);
    CHECK(split.network.vertex_count() == 4);
    CHECK(split.network.arc_count() == 3);
    CHECK(split.network.arc(0) == Arc{0, 1});
    CHECK(split.network.arc(1) == Arc{3, 2});
    CHECK(split.network.arc(2) == Arc{1, 3});
    CHECK(split.network.capacity(2) == 2);
    CHECK(split.special_vertex[2] == 1);
    CHECK(max_flow(split.network).value == 2);
  }
  SUBCASE("no internal vertex") {
    const Network net = make_net(2, {{0, 1, 3}});
    const std::vector<VertexId> exclude{0, 1};
    const SplitNetwork split = split_vertices(net, 1, exclude);
    CHECK(split.network.vertex_count() == 2);
    CHECK(split.network.arc_count() == 1);
    CHECK(split.network.arc(0) == net.arc(0));
  }
  SUBCASE("flows map back") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const Network net = random_network(rng);
      const std::vector<VertexId> exclude{net.sink()};
      const SplitNetwork split = split_vertices(net, 2, exclude);
      const Flow f = max_flow(split.network);
      const Flow back = unsplit_flow(split, net, f);
      CHECK(back.value == f.value);
      CHECK(back.value <= max_flow(net).value);
    }
  }
}

TEST_CASE("line digraph network") {
  SUBCASE("path with caps (3,2)") {
    const Network net = make_net(3, {{0, 1, 3}, {1, 2, 2}});
    const LineNetwork line = line_digraph_network(net);
    const Network& ln = line.network;
    CHECK(ln.vertex_count() == 4);
    CHECK(ln.source() == 2);
    CHECK(ln.sink() == 3);
    REQUIRE(ln.arc_count() == 3);
    CHECK(ln.arc(0) == Arc{2, 0});
    CHECK(ln.capacity(0) == 3);
    CHECK(ln.arc(1) == Arc{0, 1});
    CHECK(ln.capacity(1) == 2);
    CHECK(ln.arc(2) == Arc{1, 3});
    CHECK(ln.capacity(2) == 2);
  }
  SUBCASE("rejects s->t arcs and cycles") {
    CHECK_THROWS_AS(line_digraph_network(make_net(2, {{0, 1, 1}, {0, 1, 1}})), PreconditionError);
    CHECK_THROWS_AS(line_digraph_network(make_net(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}})),
                    PreconditionError);
  }
  SUBCASE("parallel s->t arcs after subdivision") {
    const Network net = make_net(2, {{0, 1, 1}, {0, 1, 1}});
    const std::vector<bool> all{true, true};
    const Subdivision sub = subdivide_arcs(net, all);
    const LineNetwork line = line_digraph_network(sub.network);
    CHECK(max_flow(line.network).value == 2);
    const std::vector<VertexId> exclude{line.network.source(), line.network.sink()};
    CHECK(max_flow(split_vertices(line.network, 1, exclude).network).value == 2);
  }
  SUBCASE("single arc after subdivision keeps its max flow") {
    const Network net = make_net(2, {{0, 1, 4}});
    const Subdivision sub = subdivide_arcs(net, {true});
    const LineNetwork line = line_digraph_network(sub.network);
    const Flow lf = max_flow(line.network);
    CHECK(lf.value == 4);
    const Flow back = unsubdivide_flow(sub, net, line_flow_to_original(line, sub.network, lf));
    CHECK(back.value == 4);
  }
  SUBCASE("line network never loses flow") {
    // Paths of the original map to paths of the line network, so its max
    // flow is at least the original one (it may be larger: vertices of the
    // line network carry no capacity).
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      const Network net = random_network(rng, {.acyclic = true});
      std::vector<bool> st(static_cast<std::size_t>(net.arc_count()));
      for (ArcId a = 0; a < net.arc_count(); ++a) {
        st[static_cast<std::size_t>(a)] = net.arc(a).tail == net.source() && net.arc(a).head == net.sink();
      }
      const Subdivision sub = subdivide_arcs(net, st);
      const LineNetwork line = line_digraph_network(sub.network);
      CHECK(max_flow(line.network).value >= max_flow(net).value);
    }
  }
}

TEST_CASE("mincut arcs examples") {
  CHECK(mincut_arcs(make_net(3, {{0, 1, 2}, {1, 2, 7}})) == std::vector<ArcId>{0});
  CHECK(mincut_arcs(make_net(3, {{0, 1, 2}, {1, 2, 2}})) == std::vector<ArcId>{0, 1});
  CHECK(mincut_arcs(make_net(3, {{0, 1, 2}, {1, 2, 1}, {1, 2, 5}})) == std::vector<ArcId>{0});
  CHECK(mincut_arcs(make_net(3, {{0, 1, 2}})).empty());
}

TEST_CASE("mincut arcs agree with cut enumeration") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    RandomNetworkOptions options{.max_vertices = 9, .max_arcs = 16};
    const Network net = random_network(rng, options);
    CHECK(mincut_arcs(net) == brute_mincut_arcs(net));
  }
}
