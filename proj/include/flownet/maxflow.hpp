#pragma once

#include <limits>
#include <span>
#include <vector>

#include "flownet/netcore.hpp"

namespace flownet {

inline constexpr Capacity kUnlimited = std::numeric_limits<Capacity>::max();

// Residual graph driven by shortest augmenting paths. Edges are scanned in
// insertion order, which makes every result deterministic. Zero-capacity
// edges are allowed, unlike in Network.
class ResidualGraph {
 public:
  explicit ResidualGraph(VertexId vertex_count);

  // Returns the edge index; its reverse edge is index ^ 1.
  int add_edge(VertexId tail, VertexId head, Capacity capacity);

  // Pushes up to `limit` units from s to t; returns the amount pushed.
  Capacity augment(VertexId s, VertexId t, Capacity limit = kUnlimited);

  Capacity flow_on(int edge) const;
  Capacity residual(int edge) const { return residual_[static_cast<std::size_t>(edge)]; }
  VertexId vertex_count() const noexcept { return static_cast<VertexId>(adj_.size()); }

  // Vertices reachable from `from` along edges with positive residual
  // capacity.
  std::vector<bool> reachable(VertexId from) const;

 private:
  std::vector<VertexId> head_;
  std::vector<Capacity> residual_;
  std::vector<Capacity> capacity_;
  std::vector<std::vector<int>> adj_;
};

struct Cut {
  std::vector<bool> in_x;
  std::vector<VertexId> x;
  std::vector<ArcId> arcs_across;
  Capacity capacity = 0;
};

// Integer maximum flow by shortest augmenting paths; stops early once the
// value reaches `limit`.
Flow max_flow(const Network& net, Capacity limit = kUnlimited);

// Source-side-minimal minimum cut: the vertices reachable from s in the
// residual graph of a maximum flow.
Cut min_cut(const Network& net);

// Cut induced by a vertex set X (s in X, t not in X).
Cut cut_of(const Network& net, std::vector<bool> in_x);

// Maximum number of pairwise arc-disjoint s->t paths.
int arc_connectivity(const Digraph& d, VertexId s, VertexId t);

// Network on `d` with every capacity 1.
Network unit_network(const Digraph& d, VertexId s, VertexId t);

// Result of vertex splitting. Vertex v keeps id v as v-, and v+ gets a new id
// (out_copy[v]); unsplit vertices have out_copy[v] == v. Arc a of the input
// keeps ArcId a as u+v-; the special arc of the j-th split vertex is appended
// after them.
struct SplitNetwork {
  Network network;
  std::vector<VertexId> out_copy;
  std::vector<VertexId> special_vertex;  // per arc, kNoVertex for ordinary arcs
  ArcId original_arc_count = 0;
};

SplitNetwork split_vertices(const Network& net, Capacity bound,
                            std::span<const VertexId> exclude);

// Flow on the unsplit network carried by a flow on the split one.
Flow unsplit_flow(const SplitNetwork& split, const Network& original,
                  const Flow& flow);

// Line-digraph network: vertex i stands for arc i of `net`, plus a new
// source s' and sink t'. Arc a->b exists when head(a) = tail(b) with capacity
// min(c(a), c(b)); s'->a with c(a) for arcs leaving s; a->t' with c(a) for
// arcs entering t. Requires an acyclic network without s->t arcs.
struct LineNetwork {
  Network network;
  ArcId original_arc_count = 0;
};

LineNetwork line_digraph_network(const Network& net);

// Flow on `original` whose value on arc a is the inflow of vertex a.
Flow line_flow_to_original(const LineNetwork& line, const Network& original,
                           const Flow& flow);

// Network where every selected arc uv is replaced by u->w->v through a new
// vertex w, both halves keeping c(uv). image[a] lists the arcs of the result
// that arc a became (one or two). origin() of the result maps back.
struct Subdivision {
  Network network;
  std::vector<std::vector<ArcId>> image;
};

Subdivision subdivide_arcs(const Network& net, const std::vector<bool>& selected);

// Flow on the original network read off the first image arc of each arc.
Flow unsubdivide_flow(const Subdivision& sub, const Network& original,
                      const Flow& flow);

// Arcs that belong to at least one minimum (s,t)-cut, in ArcId order.
// Arc uv qualifies iff, in the residual graph of any maximum flow, neither v
// nor t is reachable from {s, u}.
std::vector<ArcId> mincut_arcs(const Network& net);

}  // namespace flownet
