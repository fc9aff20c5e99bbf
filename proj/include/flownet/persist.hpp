#pragma once

#include <cstdint>
#include <vector>

#include "flownet/netcore.hpp"
#include "flownet/oracle.hpp"

namespace flownet {

// Worst k-deletion for a flow x: the smallest max-flow value of the support
// D_x (capacities c) after removing a set A' of k arcs outside A_mincut.
// When fewer than k arcs are eligible, all of them are removed; with none
// eligible the value is |x|.
struct PersistenceReport {
  Flow flow;
  int k = 0;
  std::vector<ArcId> worst_set;
  Capacity residual_value = 0;
};

// Exhaustive over all eligible subsets; each subset counts as a state.
PersistenceReport persistence_value(const Network& net, const Flow& x, int k,
                                    const Budget& budget = Budget::from_env());

// Among all integer maximum flows, the lexicographically first one with the
// largest persistence value. Throws BudgetError past the size guard.
PersistenceReport best_persistent_max_flow_bruteforce(const Network& net, int k,
                                                      const Budget& budget = Budget::from_env());

// Vertices incident to an arc of some minimum (s,t)-cut, ascending.
std::vector<VertexId> mincut_vertices(const Network& net);

// Vertex analogue: V' ranges over k-subsets of V - V_mincut, removed from
// D_x with their incident arcs. s and t are never deleted.
struct VertexPersistenceReport {
  Flow flow;
  int k = 0;
  std::vector<VertexId> worst_set;
  Capacity residual_value = 0;
};

VertexPersistenceReport vertex_persistence_value(const Network& net, const Flow& x, int k,
                                                 const Budget& budget = Budget::from_env());

VertexPersistenceReport best_vertex_persistent_max_flow_bruteforce(
    const Network& net, int k, const Budget& budget = Budget::from_env());

// Fewest arcs whose deletion leaves a max-flow value below K (K >= 1), with
// a witness set found first in size-then-lexicographic order.
struct ThresholdReport {
  int deletions = 0;
  std::vector<ArcId> arcs;
};

ThresholdReport min_deletions_below(const Network& net, Capacity K,
                                    const Budget& budget = Budget::from_env());

}  // namespace flownet
