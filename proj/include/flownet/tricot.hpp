#pragma once

#include <cstdint>
#include <vector>

#include "flownet/netcore.hpp"
#include "flownet/psplit.hpp"

namespace flownet {

// Paths Q_1..Q_k from s meeting only at s, Q_i ending at endpoints[i];
// value[i] is the smallest capacity on Q_i.
struct Tricot {
  std::vector<VertexId> endpoints;
  std::vector<std::vector<ArcId>> paths;
  std::vector<Capacity> value;

  Capacity total() const;
};

// Checks the tricot conditions on `net`, including recomputed bottlenecks.
bool is_tricot(const Network& net, const Tricot& tricot);

// Tricots sharing one endpoint tuple whose values are pairwise
// incomparable (coordinatewise).
class DominanceSet {
 public:
  // Adds `t` unless an entry's value is >= t's everywhere; entries that t
  // dominates are dropped. Returns whether t was added.
  bool insert(Tricot t);
  const std::vector<Tricot>& entries() const noexcept { return entries_; }

 private:
  std::vector<Tricot> entries_;
};

struct TricotOptions {
  // Refuse inputs whose estimate C(n+m, p) * m^p exceeds this.
  double max_estimate = 1e12;
};

// Best flow made of at most p internally vertex-disjoint path-flows, for
// acyclic networks, by the tricot dynamic program run for every p' <= p.
// In the result, c lists the path values; nu_star is 0. Throws
// PreconditionError on cyclic input and BudgetError past the size guard.
PSplitSolution tricot_dp_exact(const Network& net, int p, const TricotOptions& options = {});

// Best flow made of at most p arc-disjoint path-flows for acyclic networks:
// the vertex-disjoint program on the line-digraph network.
PSplitSolution arc_disjoint_exact_acyclic(const Network& net, int p,
                                          const TricotOptions& options = {});

}  // namespace flownet
