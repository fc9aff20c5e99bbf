#pragma once

#include <optional>
#include <vector>

#include "flownet/netcore.hpp"

namespace flownet {

struct WidestPath {
  std::vector<ArcId> arcs;
  Capacity value = 0;  // 0 when t is unreachable
};

// s->t path maximizing its smallest capacity (max-bottleneck Dijkstra,
// arcs relaxed in ArcId order).
WidestPath widest_path(const Network& net);

// Flow sending the widest-path value along the widest path. This is an
// optimal flow with out-degree at most 1 in its support.
Flow widest_path_flow(const Network& net);

// Largest out-degree of the support of `flow`.
int support_out_degree(const Network& net, const Flow& flow);
int support_in_degree(const Network& net, const Flow& flow);

// Maximum flow whose support has out-degree <= k, for unit-capacity
// networks: every vertex other than t is split with a special arc of
// capacity k. Throws PreconditionError on other capacities.
Flow unit_capacity_deg_max_flow(const Network& net, int k);

// All (s,t)-vertex separators, in the order they appear on a BFS s->t path.
// Throws PreconditionError when t is unreachable.
std::vector<VertexId> st_vertex_separators(const Digraph& d, VertexId s, VertexId t);

// Arcs that can carry flow in an acyclic s->t flow: tail reachable from s,
// head reaching t, not entering s and not leaving t.
std::vector<bool> st_relevant_arcs(const Network& net);

struct SeparatorChain {
  std::vector<VertexId> separators;  // s, s_1, ..., s_r, t
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::vector<ArcId>> block_arcs;
};

// Separator chain of the network restricted to its relevant arcs.
SeparatorChain separator_chain(const Network& net);

// A flow of value exactly k+1 whose support has out-degree <= k, or nullopt
// when none exists.
std::optional<Flow> deg_flow_value_k_plus_1(const Network& net, int k);

}  // namespace flownet
