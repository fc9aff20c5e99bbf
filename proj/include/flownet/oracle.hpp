#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flownet/cnf.hpp"
#include "flownet/netcore.hpp"
#include "flownet/variant.hpp"

namespace flownet {

// Size limits for exhaustive solvers. Exceeding any of them throws
// BudgetError; no oracle ever returns a partial answer.
struct Budget {
  int max_arcs = 14;
  int max_vertices = 12;
  Capacity max_cap = 6;
  std::int64_t max_states = 10'000'000;

  // Defaults, with max_states taken from FLOWNET_BUDGET_STATES when set.
  static Budget from_env();
  // Size limits loose enough for the gadget networks.
  static Budget gadget();

  void check(const Network& net) const;
};

// Counts search states against a budget.
class StateCounter {
 public:
  explicit StateCounter(std::int64_t limit) : limit_(limit) {}
  void tick();
  std::int64_t count() const noexcept { return count_; }

 private:
  std::int64_t limit_;
  std::int64_t count_ = 0;
};

// Maximum value of a flow x with d+(v) <= k_out in D_x for every vertex (and
// d-(v) <= k_in when given), by trying every choice of k_out kept out-arcs at
// each vertex of larger out-degree (likewise for in-arcs).
Capacity oracle_deg_max_flow(const Network& net, int k_out,
                             std::optional<int> k_in = std::nullopt,
                             const Budget& budget = {});

// All simple s->t paths as arc lists, depth-first in ArcId order.
std::vector<std::vector<ArcId>> simple_paths(const Network& net, StateCounter& counter);

// Maximum value of a flow that is the sum of at most p path-flows, pairwise
// arc-disjoint or internally vertex-disjoint for the disjoint variants.
Capacity oracle_p_split(const Network& net, int p, SplitVariant variant,
                        const Budget& budget = {});

enum class SeparableMode { kVertex, kArc };

// Maximum value of a flow that is a sum of path-flows in which every vertex
// of D - {s,t} (or every arc) lies on at most q of the paths.
Capacity oracle_q_separable(const Network& net, int q, SeparableMode mode,
                            const Budget& budget = {});

// Calls `visit` once for every integer maximum flow, in lexicographic order
// of the arc value vectors. Returns the number of flows.
std::int64_t enumerate_max_flows(const Network& net,
                                 const std::function<void(const Flow&)>& visit,
                                 const Budget& budget = {});

// True iff the max flow is the only one: the residual graph of a maximum
// flow has no directed cycle other than an arc with its own reverse.
bool max_flow_is_unique(const Network& net);

// Satisfiability by trying every assignment; at most 20 variables.
bool sat_bruteforce(const CnfFormula& f);

}  // namespace flownet
