#pragma once

#include <vector>

#include "flownet/netcore.hpp"

namespace flownet {

// Arcs lying on every s->t path of `d`, in their order along a BFS s->t path.
// Throws PreconditionError when t is unreachable.
std::vector<ArcId> st_cut_arcs(const Digraph& d, VertexId s, VertexId t);

// Cut-arcs u_1v_1..u_lv_l of the support of a flow (as ArcIds of the
// network) and the blocks X_0..X_l: X_i holds the vertices on a path from v_i
// to u_{i+1} in the support, with v_0 = s and u_{l+1} = t.
struct CutArcChain {
  std::vector<ArcId> cut_arcs;
  std::vector<std::vector<VertexId>> blocks;
};

// Throws PreconditionError for a zero flow.
CutArcChain cut_arc_chain(const Network& net, const Flow& flow);

int support_cut_arc_count(const Network& net, const Flow& flow);

struct StrongFlowResult {
  Flow flow;
  // Cut-arc count of the support before the first rerouting and after each
  // one; strictly decreasing, ending at 0.
  std::vector<int> cut_arc_trace;
};

// Maximum flow whose support has two arc-disjoint s->t paths. Starts from an
// acyclic maximum flow and reroutes one unit at a time: +1 along a path P of
// zero-flow arcs leaving X_0 and first meeting a later block, -1 along a
// support path Q with the same ends. Throws PreconditionError when the
// digraph itself has arc connectivity < 2.
StrongFlowResult two_arc_strong_max_flow(const Network& net);

}  // namespace flownet
