#pragma once

#include <vector>

#include "flownet/netcore.hpp"

namespace flownet {

enum class ComponentKind { kPath, kCycle };

// One path-flow or cycle-flow. For a cycle the first vertex is repeated at
// the end of `vertices`.
struct FlowComponent {
  ComponentKind kind = ComponentKind::kPath;
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;
  Capacity value = 0;
};

struct FlowDecomposition {
  std::vector<FlowComponent> components;

  int path_count() const;
  int cycle_count() const;
};

// Greedy decomposition: s->t paths first (depth-first, smallest ArcId
// first), each taking min(bottleneck, remaining value), then cycles.
FlowDecomposition decompose(const Network& net, const Flow& flow);

// Per-arc sum of the components.
std::vector<Capacity> recompose(const Network& net, const FlowDecomposition& dec);

// Cancels directed cycles of the support by their minimum arc value until
// the support is acyclic. The value is unchanged and the support only
// shrinks.
Flow acyclify(const Network& net, const Flow& flow);

// Flow made of the first path components of `dec` whose values sum to
// `target` (the last one is cut short if needed). Requires a decomposition
// whose paths carry at least `target`.
Flow truncate_flow(const Network& net, const FlowDecomposition& dec,
                   Capacity target);

}  // namespace flownet
