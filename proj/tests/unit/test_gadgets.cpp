#include <random>
#include <set>

#include "doctest.h"
#include "flownet/decomp.hpp"
#include "flownet/degflow.hpp"
#include "flownet/error.hpp"
#include "flownet/gadgets.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/oracle.hpp"
#include "flownet/random.hpp"
#include "test_util.hpp"

using namespace flownet;
using flownet::testing::make_net;

namespace {

CnfFormula formula(int n, std::vector<Clause> clauses) { return {n, std::move(clauses)}; }

// (x1 v x2 v -x3)(-x1 v x2 v x3)(-x1 v -x2 v -x3)
CnfFormula three_clause_formula() { return formula(3, {{1, 2, -3}, {-1, 2, 3}, {-1, -2, -3}}); }

// Every variable twice in each polarity; all-true satisfies it.
CnfFormula canonical_b2() {
  return formula(3, {{1, 2, 3}, {1, -2, -3}, {-1, 2, -3}, {-1, -2, 3}});
}

std::optional<std::vector<bool>> find_assignment(const CnfFormula& f) {
  const int n = f.variable_count;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> a(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

Capacity cap(const GadgetOutput& g, const std::string& from, const std::string& to) {
  const Network& net = g.network;
  const VertexId u = g.vertex(from);
  const VertexId v = g.vertex(to);
  for (ArcId a : net.digraph().out_arcs(u)) {
    if (net.arc(a).head == v) return net.capacity(a);
  }
  return 0;
}

// Flow paths pairwise share no vertex other than s and t.
bool vertex_disjoint_paths(const Network& net, const Flow& flow, int expected_paths) {
  const FlowDecomposition dec = decompose(net, flow);
  if (dec.cycle_count() != 0 || dec.path_count() != expected_paths) return false;
  std::set<VertexId> seen;
  for (const FlowComponent& c : dec.components) {
    for (std::size_t i = 1; i + 1 < c.vertices.size(); ++i) {
      if (!seen.insert(c.vertices[i]).second) return false;
    }
  }
  return true;
}

const CnfFormula kUnsatTiny = formula(1, {{1, 1, 1}, {-1, -1, -1}});
const CnfFormula kUnsatTwo = formula(2, {{1, 2, 2}, {1, -2, -2}, {-1, 2, 2}, {-1, -2, -2}});

}  // namespace

TEST_CASE("padding adds tautological clauses at the end") {
  const CnfFormula f = formula(2, {{1, 1, 2}});
  const CnfFormula g = pad_both_polarities(f);
  REQUIRE(g.clauses.size() == 3);
  CHECK(g.clauses[1] == Clause{1, -1, 1});
  CHECK(g.clauses[2] == Clause{2, -2, 2});
  CHECK(pad_both_polarities(three_clause_formula()).clauses.size() == 3);
}

TEST_CASE("sat_deg network on a three-clause formula") {
  const CnfFormula f = three_clause_formula();
  const GadgetOutput g = gen_sat_deg_network(f, 2);
  const int m = 3;
  CHECK(g.network.vertex_count() == 2 + 4 + 3 * m + m);
  CHECK(g.network.arc_count() == 2 + 3 + 3 * m + 2 * 3 + 3 * m + m);
  CHECK(is_acyclic(g.network.digraph()));
  CHECK(g.metadata["target_value"] == 3 * m + 1);
  CHECK(cap(g, "s", "u1") == 3 * m + 1);
  for (int i = 1; i <= 3; ++i) {
    CHECK(cap(g, "u" + std::to_string(i), "v" + std::to_string(i)) == 2 * m + 1);
  }
  CHECK(cap(g, "v3", "t") == 2 * m + 1);
  CHECK(cap(g, "u1", "y1,1") == m);
  CHECK(cap(g, "y1,1", "v1") == m);
  CHECK(cap(g, "u1", "z1,1") == m);
  CHECK(cap(g, "z1,1", "z1,2") == m);
  // x1 occurs positively in C1 and negatively in C2, C3.
  CHECK(cap(g, "y1,1", "y1") == 1);
  CHECK(cap(g, "z1,1", "y2") == 1);
  CHECK(cap(g, "z1,2", "y3") == 1);
  CHECK(cap(g, "y3", "t") == 1);
  CHECK(max_flow(g.network).value == 3 * m + 1);

  const auto a = find_assignment(f);
  REQUIRE(a);
  const Flow w = sat_deg_witness(g, f, *a);
  CHECK(w.value == 3 * m + 1);
  CHECK(support_out_degree(g.network, w) <= 2);
  CHECK(oracle_deg_max_flow(g.network, 2, std::nullopt, Budget::gadget()) == 3 * m + 1);
}

TEST_CASE("sat_deg k >= 3 variant") {
  const CnfFormula f = three_clause_formula();
  for (int k = 3; k <= 4; ++k) {
    const GadgetOutput g = gen_sat_deg_network(f, k);
    const int m = 3;
    const int target = m + (k - 1) * (2 * m + 1);
    CHECK(g.metadata["target_value"] == target);
    CHECK(g.network.vertex_count() == 2 + 4 + 4 * m + 3 * (k - 1));
    CHECK(is_acyclic(g.network.digraph()));
    CHECK(cap(g, "u2", "r2," + std::to_string(k - 1)) == 2 * m + 1);
    const Flow w = sat_deg_witness(g, f, *find_assignment(f));
    CHECK(w.value == target);
    CHECK(support_out_degree(g.network, w) <= k);
  }
  CHECK_THROWS_AS(gen_sat_deg_network(f, 1), InputError);
  CHECK_THROWS_AS(gen_sat_deg_network(CnfFormula{}, 2), InputError);
  CHECK_THROWS_AS(gen_sat_deg_network(formula(1, {{1, 2, 1}}), 2), InputError);
}

TEST_CASE("sat_deg equivalence on tiny formulas") {
  for (const CnfFormula& f : {kUnsatTiny, kUnsatTwo}) {
    const GadgetOutput g = gen_sat_deg_network(f, 2);
    const Capacity target = g.metadata["target_value"].get<Capacity>();
    CHECK_FALSE(sat_bruteforce(f));
    CHECK(oracle_deg_max_flow(g.network, 2, std::nullopt, Budget::gadget()) < target);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 12; ++i) {
    const CnfFormula f = random_cnf(rng, 2, 4);
    const GadgetOutput g = gen_sat_deg_network(f, 2);
    const Capacity target = g.metadata["target_value"].get<Capacity>();
    const bool sat = sat_bruteforce(f);
    CHECK(sat == (oracle_deg_max_flow(g.network, 2, std::nullopt, Budget::gadget()) == target));
    if (sat) {
      const Flow w = sat_deg_witness(g, f, *find_assignment(f));
      CHECK(w.value == target);
      CHECK(support_out_degree(g.network, w) <= 2);
    }
  }
  const GadgetOutput g = gen_sat_deg_network(kUnsatTiny, 2);
  CHECK_THROWS_AS(sat_deg_witness(g, kUnsatTiny, {false, true}), InputError);
}

TEST_CASE("value-9 gadget") {
  const CnfFormula f = canonical_b2();
  REQUIRE(is_3b2(f));
  CHECK_FALSE(is_3b2(three_clause_formula()));
  CHECK_THROWS_AS(gen_b2sat_value9_network(three_clause_formula()), InputError);
  const GadgetOutput g = gen_b2sat_value9_network(f);
  CHECK(g.network.vertex_count() == 3 * 16 + 2 * 4 + 2);
  // Per variable 2*10 + 1 gadget arcs; 2 spine arcs, s u^1 and v^n t;
  // clause chain m+1 arcs; 4 arcs per variable occurrence pair.
  CHECK(g.network.arc_count() == 3 * 21 + 2 + 2 + 5 + 3 * 8);
  CHECK_FALSE(is_acyclic(g.network.digraph()));
  CHECK(cap(g, "s", "u^1") == 8);
  CHECK(cap(g, "v^1", "u^2") == 8);
  CHECK(cap(g, "v^3", "t") == 8);
  CHECK(cap(g, "s", "q1") == 1);
  CHECK(cap(g, "r4", "t") == 1);
  CHECK(cap(g, "r1", "q2") == 1);
  CHECK(cap(g, "u^2", "v^2") == 4);
  CHECK(cap(g, "u^2", "y1^2") == 4);
  CHECK(cap(g, "z1^2", "z2^2") == 4);
  CHECK(cap(g, "z4^2", "z5^2") == 4);
  CHECK(cap(g, "y7^2", "v^2") == 4);
  CHECK(cap(g, "y2^2", "y3^2") == 2);
  CHECK(cap(g, "y2^2", "y4^2") == 2);
  CHECK(cap(g, "z5^2", "z7^2") == 2);
  // x1 positive in C1 then C2: C1 enters y4, C2 enters y1.
  CHECK(cap(g, "q1", "y4^1") == 1);
  CHECK(cap(g, "y5^1", "r1") == 1);
  CHECK(cap(g, "q2", "y1^1") == 1);
  CHECK(cap(g, "y2^1", "r2") == 1);
  CHECK(cap(g, "q3", "z4^1") == 1);
  CHECK(cap(g, "q4", "z1^1") == 1);

  const Flow w = b2sat_value9_witness(g, f, {false, true, true, true});
  CHECK(w.value == 9);
  CHECK(support_out_degree(g.network, w) <= 2);
  // Another satisfying assignment.
  const std::vector<bool> other{false, true, false, false};
  REQUIRE(f.satisfied_by(other));
  const Flow w2 = b2sat_value9_witness(g, f, other);
  CHECK(w2.value == 9);
  CHECK(support_out_degree(g.network, w2) <= 2);
}

TEST_CASE("lambda counterexample family") {
  const GadgetOutput g3 = gen_lambda_counterexample(3);
  CHECK(g3.network.vertex_count() == 6);
  CHECK(g3.network.arc_count() == 9);
  CHECK(max_flow(g3.network).value == 4);
  CHECK(arc_connectivity(g3.network.digraph(), g3.network.source(), g3.network.sink()) == 3);
  for (int lambda = 3; lambda <= 4; ++lambda) {
    const GadgetOutput g = gen_lambda_counterexample(lambda);
    const Network& net = g.network;
    CHECK(max_flow(net).value == 2 * lambda - 2);
    CHECK(arc_connectivity(net.digraph(), net.source(), net.sink()) == lambda);
    CHECK(g.metadata["max_flow"] == 2 * lambda - 2);
    int worst = 0;
    const auto count = enumerate_max_flows(net, [&](const Flow& f) {
      const Digraph d = support(net, f);
      worst = std::max(worst, arc_connectivity(d, net.source(), net.sink()));
    }, Budget::gadget());
    CHECK(count > 0);
    CHECK(worst == 2);
  }
  CHECK_THROWS_AS(gen_lambda_counterexample(2), InputError);
}

TEST_CASE("p-split hardness family") {
  const LinkageInstance pos = toy_linkage(true);
  const LinkageInstance neg = toy_linkage(false);
  const GadgetOutput gp = gen_psplit_hard(4, pos, PSplitFamily::kRho1);
  const GadgetOutput gn = gen_psplit_hard(4, neg, PSplitFamily::kRho1);
  CHECK(gp.metadata["o_plus"] == 6);
  CHECK(gp.metadata["o_minus"] == 5);
  CHECK(gp.network.vertex_count() == 2 + 2 * 4);
  CHECK(oracle_p_split(gp.network, 4, SplitVariant::kUnrestricted, Budget::gadget()) == 6);
  CHECK(oracle_p_split(gn.network, 4, SplitVariant::kUnrestricted, Budget::gadget()) <= 5);
  const Flow w = psplit_hard_witness(gp, pos, {0}, {1});
  CHECK(w.value == 6);
  CHECK(decompose(gp.network, w).path_count() <= 4);

  const GadgetOutput g5 = gen_psplit_hard(5, pos, PSplitFamily::kRho1);
  CHECK(g5.metadata["o_plus"] == 7);
  CHECK(g5.metadata["o_minus"] == 6);
  CHECK(g5.metadata["direct_arc"] == true);
  CHECK(oracle_p_split(g5.network, 5, SplitVariant::kUnrestricted, Budget::gadget()) == 7);
  const GadgetOutput g6 = gen_psplit_hard(6, pos, PSplitFamily::kRho1);
  CHECK(g6.metadata["o_plus"] == 9);
  CHECK(g6.metadata["copies"].size() == 3);
  CHECK(gen_psplit_hard(7, pos, PSplitFamily::kRho1).metadata["o_minus"] == 8);

  const GadgetOutput r2 = gen_psplit_hard(2, pos, PSplitFamily::kRho2);
  CHECK(r2.metadata["o_plus"] == 5);
  CHECK(r2.metadata["o_minus"] == 4);
  CHECK(oracle_p_split(r2.network, 2, SplitVariant::kUnrestricted, Budget::gadget()) == 5);
  const GadgetOutput r2n = gen_psplit_hard(2, neg, PSplitFamily::kRho2);
  CHECK(oracle_p_split(r2n.network, 2, SplitVariant::kUnrestricted, Budget::gadget()) <= 4);
  CHECK(psplit_hard_witness(r2, pos, {0}, {1}).value == 5);
  const GadgetOutput r3 = gen_psplit_hard(3, pos, PSplitFamily::kRho2);
  CHECK(r3.metadata["o_plus"] == 6);
  CHECK(r3.metadata["o_minus"] == 5);

  CHECK_THROWS_AS(gen_psplit_hard(1, pos, PSplitFamily::kRho1), InputError);
  LinkageInstance broken = pos;
  broken.t2 = broken.s1;
  CHECK_THROWS_AS(gen_psplit_hard(4, broken, PSplitFamily::kRho1), InputError);
  LinkageInstance no_path{Digraph(4, {{0, 2}}), 0, 1, 2, 3};
  CHECK_THROWS_AS(gen_psplit_hard(4, no_path, PSplitFamily::kRho1), InputError);
  CHECK_THROWS_AS(psplit_hard_witness(gn, neg, {1}, {0, 1, 2}), InputError);
}

TEST_CASE("vertex-disjoint hardness network") {
  const CnfFormula f = three_clause_formula();
  const GadgetOutput g = gen_vertex_disjoint_hard(f);
  const int m = 3;
  CHECK(is_acyclic(g.network.digraph()));
  CHECK(g.network.vertex_count() == 2 + 4 + 3 * m + 2 * m);
  CHECK(g.metadata["target_value"] == 2 * m + 1);
  CHECK(cap(g, "s", "u1") == 1);
  CHECK(cap(g, "s", "y'1") == 2);
  CHECK(cap(g, "y'1", "y1,1") == 2);
  CHECK(cap(g, "y1,1", "y1") == 2);
  CHECK(cap(g, "y1", "t") == 2);
  CHECK(cap(g, "u1", "y1,1") == 1);
  CHECK(cap(g, "v3", "t") == 1);
  for (Capacity c : g.network.capacities()) CHECK((c == 1 || c == 2));
  const Flow w = vertex_disjoint_witness(g, f, *find_assignment(f));
  CHECK(w.value == 2 * m + 1);
  CHECK(vertex_disjoint_paths(g.network, w, m + 1));

  const CnfFormula sat = formula(1, {{1, 1, 1}});
  const GadgetOutput gs = gen_vertex_disjoint_hard(sat);
  const int ms = gs.metadata["m"].get<int>();
  CHECK(oracle_p_split(gs.network, ms + 1, SplitVariant::kVertexDisjoint, Budget::gadget()) == 2 * ms + 1);
  const GadgetOutput gu = gen_vertex_disjoint_hard(kUnsatTiny);
  CHECK(oracle_p_split(gu.network, 3, SplitVariant::kVertexDisjoint, Budget::gadget()) < 5);
}

TEST_CASE("separable reduction") {
  const Network one = make_net(3, {{0, 1, 2}, {1, 2, 1}});
  const GadgetOutput same = gen_separable_hard(one, 1);
  CHECK(same.network.vertex_count() == 3);
  CHECK(same.network.arc_count() == 2);
  CHECK(same.metadata["offset"] == 0);
  const GadgetOutput two = gen_separable_hard(one, 2);
  CHECK(two.network.vertex_count() == 5);
  CHECK(two.network.arc_count() == 6);
  CHECK(two.metadata["offset"] == 2);
  CHECK(cap(two, "s", "v1-1") == 2);
  CHECK(cap(two, "v1+1", "t") == 2);

  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 25) {
    Network net = random_network(rng, {.max_vertices = 5, .max_arcs = 7, .max_capacity = 2, .acyclic = true});
    const GadgetOutput g1 = gen_separable_hard(net, 1);
    const GadgetOutput g2 = gen_separable_hard(net, 2);
    const int p = g1.metadata["p"].get<int>();
    if (p == 0) continue;
    const Capacity base = oracle_p_split(net, p, SplitVariant::kVertexDisjoint);
    for (const GadgetOutput* g : {&g1, &g2}) {
      const Capacity offset = g->metadata["offset"].get<Capacity>();
      CHECK(oracle_q_separable(g->network, g->metadata["q"].get<int>(), SeparableMode::kVertex, Budget::gadget()) ==
            base + offset);
    }
    ++checked;
  }
  CHECK_THROWS_AS(gen_separable_hard(make_net(3, {{0, 1, 3}, {1, 2, 1}}), 2), PreconditionError);
  CHECK_THROWS_AS(gen_separable_hard(make_net(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}}), 2), PreconditionError);
  CHECK_THROWS_AS(gen_separable_hard(one, 0), InputError);
}

TEST_CASE("in-branching tail") {
  const CnfFormula f = three_clause_formula();
  const GadgetOutput base = gen_sat_deg_network(f, 2);
  const GadgetOutput g = gen_inout_tail(base);
  CHECK(g.network.vertex_count() == base.network.vertex_count() + 3);
  CHECK(cap(g, "y1", "t1") == 1);
  CHECK(cap(g, "y3", "t3") == 1);
  CHECK(cap(g, "t1", "t2") == 1);
  CHECK(cap(g, "t2", "t3") == 2);
  CHECK(cap(g, "t3", "t") == 3);
  CHECK(cap(g, "v3", "t") == 7);
  CHECK(cap(g, "y1", "t") == 0);
  CHECK(is_acyclic(g.network.digraph()));
  CHECK(max_flow(g.network).value == max_flow(base.network).value);
  CHECK(oracle_deg_max_flow(g.network, 2, std::nullopt, Budget::gadget()) ==
        oracle_deg_max_flow(g.network, 2, 2, Budget::gadget()));

  for (const CnfFormula& h : {kUnsatTiny, formula(1, {{1, 1, 1}})}) {
    const GadgetOutput t = gen_inout_tail(gen_sat_deg_network(h, 2));
    CHECK(oracle_deg_max_flow(t.network, 2, std::nullopt, Budget::gadget()) ==
          oracle_deg_max_flow(t.network, 2, 2, Budget::gadget()));
  }
  CHECK_THROWS_AS(gen_inout_tail(gen_sat_deg_network(f, 3)), InputError);
  CHECK_THROWS_AS(gen_inout_tail(gen_lambda_counterexample(3)), InputError);
}

TEST_CASE("gadget json") {
  const GadgetOutput g = gen_lambda_counterexample(3);
  const nlohmann::json j = gadget_to_json(g);
  CHECK(j["name"] == "lambda");
  CHECK(j["labels"]["t"] == 5);
  CHECK(j["metadata"]["lambda"] == 3);
  CHECK_THROWS_AS(g.vertex("nope"), InputError);
}
