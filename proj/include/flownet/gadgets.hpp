#pragma once

#include <map>
#include <string>
#include <vector>

#include "flownet/cnf.hpp"
#include "flownet/netcore.hpp"
#include "json.hpp"

namespace flownet {

// A generated network with names for its vertices and the values the
// construction promises (metadata["target_value"], o_plus/o_minus, ...).
struct GadgetOutput {
  std::string name;
  Network network;
  std::map<std::string, VertexId> labels;
  nlohmann::json metadata;

  VertexId vertex(const std::string& label) const;
};

// {"name", "labels", "metadata"}.
nlohmann::json gadget_to_json(const GadgetOutput& g);

// Appends a clause (x, -x, x) for every variable that lacks a positive or a
// negative occurrence. The added clauses are always satisfied.
CnfFormula pad_both_polarities(const CnfFormula& f);

// Acyclic network with a flow of value 3m+1 (k = 2) or m+(k-1)(2m+1)
// (k >= 3) whose support has out-degree <= k iff f is satisfiable. The
// formula is padded first. Labels: s, t, u1..u(n+1) with v_i = u(i+1) also
// named v1..vn, occurrence vertices "y<i>,<r>" / "z<i>,<r>", clause vertices
// "y<j>", and for k >= 3 the spine vertices "r<i>,<l>".
GadgetOutput gen_sat_deg_network(const CnfFormula& f, int k);

// The flow of the forward direction for a satisfying assignment (index
// 1..n). Throws InputError when the assignment does not satisfy f.
Flow sat_deg_witness(const GadgetOutput& g, const CnfFormula& f, const std::vector<bool>& assignment);

// True iff every variable occurs exactly twice positively and twice
// negatively.
bool is_3b2(const CnfFormula& f);

// Network with a flow of value 9 and out-degree <= 2 iff f is satisfiable;
// f must be (3,B2). Labels: s, t, "<w>^<i>" for the gadget vertices
// (u, v, y1..y7, z1..z7) of variable i, q<j>, r<j>.
GadgetOutput gen_b2sat_value9_network(const CnfFormula& f);

Flow b2sat_value9_witness(const GadgetOutput& g, const CnfFormula& f,
                          const std::vector<bool>& assignment);

// lambda-2 paths s u_i v_i t, paths s y t and s z t, arcs u_i y and z v_i;
// capacity 1 except c(sz) = c(yt) = lambda-1.
GadgetOutput gen_lambda_counterexample(int lambda);

// Instance of the weak 2-linkage problem on d.
struct LinkageInstance {
  Digraph d;
  VertexId s1 = 0;
  VertexId s2 = 0;
  VertexId t1 = 0;
  VertexId t2 = 0;
};

// Positive: arcs s1->t1 and s2->t2. Negative: s2->s1, s1->t1, t1->t2, so
// both paths need s1->t1.
LinkageInstance toy_linkage(bool positive);

enum class PSplitFamily { kRho1, kRho2 };

// Copies of d between a new s and t (plus an s->t arc for odd p in family
// rho2 and for p = 1, 3 mod 4 in rho1). metadata: q, copies, o_plus,
// o_minus, and per copy the offsets of its vertices and arcs.
GadgetOutput gen_psplit_hard(int p, const LinkageInstance& inst, PSplitFamily family);

// The o_plus flow from arc-disjoint linkage paths p1 (s1->t1), p2 (s2->t2)
// given as arcs of inst.d.
Flow psplit_hard_witness(const GadgetOutput& g, const LinkageInstance& inst,
                         const std::vector<ArcId>& p1, const std::vector<ArcId>& p2);

// Acyclic network with a flow of value 2m+1 made of m+1 internally
// vertex-disjoint path-flows iff f is satisfiable; capacities 1 and 2.
// Labels as in gen_sat_deg_network plus "y'<j>".
GadgetOutput gen_vertex_disjoint_hard(const CnfFormula& f);

Flow vertex_disjoint_witness(const GadgetOutput& g, const CnfFormula& f,
                             const std::vector<bool>& assignment);

// For every v other than s, t and i in [q-1]: new vertices v_i-, v_i+ and
// the path s v_i- v v_i+ t with capacity 2. metadata: offset 2n(q-1), p =
// d+(s). net must be acyclic with capacities in {1, 2}.
GadgetOutput gen_separable_hard(const Network& net, int q);

// Replaces the sink of a k = 2 gen_sat_deg_network output by the chain
// y_j -> t_j (1), t_j -> t_(j+1) (j), t_m -> t (m), keeping v_n -> t.
GadgetOutput gen_inout_tail(const GadgetOutput& sat_deg);

}  // namespace flownet
