#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace flownet {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using Capacity = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed multigraph with dense vertex ids. Arc identity is the position in
// the arc list, so parallel arcs are distinct. Self-loops are rejected.
//
// A digraph derived from another one (a support, a capacity-scaled copy, ...)
// can remember for each of its arcs the id of the arc it came from; see
// origin().
class Digraph {
 public:
  Digraph() = default;
  Digraph(VertexId vertex_count, std::vector<Arc> arcs,
          std::vector<ArcId> origin = {});

  VertexId vertex_count() const noexcept { return vertex_count_; }
  ArcId arc_count() const noexcept { return static_cast<ArcId>(arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const ArcId> out_arcs(VertexId v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    return in_[static_cast<std::size_t>(v)];
  }

  int out_degree(VertexId v) const {
    return static_cast<int>(out_arcs(v).size());
  }
  int in_degree(VertexId v) const { return static_cast<int>(in_arcs(v).size()); }
  int max_out_degree() const;
  int max_in_degree() const;

  // Id of the arc this arc was derived from; the identity unless an origin
  // map was given at construction.
  ArcId origin(ArcId a) const {
    return origin_.empty() ? a : origin_[static_cast<std::size_t>(a)];
  }
  std::span<const ArcId> origin_map() const noexcept { return origin_; }

  bool valid_vertex(VertexId v) const noexcept {
    return v >= 0 && v < vertex_count_;
  }

 private:
  VertexId vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<ArcId> origin_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

// Integer-capacitated digraph with a designated source and sink.
class Network {
 public:
  Network() = default;
  Network(Digraph digraph, VertexId source, VertexId sink,
          std::vector<Capacity> capacities);

  const Digraph& digraph() const noexcept { return digraph_; }
  VertexId source() const noexcept { return source_; }
  VertexId sink() const noexcept { return sink_; }
  VertexId vertex_count() const noexcept { return digraph_.vertex_count(); }
  ArcId arc_count() const noexcept { return digraph_.arc_count(); }
  const Arc& arc(ArcId a) const { return digraph_.arc(a); }
  Capacity capacity(ArcId a) const {
    return capacities_[static_cast<std::size_t>(a)];
  }
  std::span<const Capacity> capacities() const noexcept { return capacities_; }
  Capacity max_capacity() const noexcept;

 private:
  Digraph digraph_;
  VertexId source_ = 0;
  VertexId sink_ = 0;
  std::vector<Capacity> capacities_;
};

// Integer flow on a network: one value per ArcId. `value` is the net outflow
// of the source.
struct Flow {
  std::vector<Capacity> x;
  Capacity value = 0;

  friend bool operator==(const Flow&, const Flow&) = default;
};

// Overflow-checked addition on capacities; throws InputError on overflow.
Capacity checked_add(Capacity a, Capacity b);

// Net outflow of the source.
Capacity flow_value(const Network& net, std::span<const Capacity> x);

// Zero flow on `net`.
Flow zero_flow(const Network& net);

// Builds a flow from per-arc values, computing its value and validating it.
Flow make_flow(const Network& net, std::vector<Capacity> x);

// Throws InputError describing the first violated flow invariant: wrong
// length, capacity bound, conservation, value mismatch or negative value.
void validate_flow(const Network& net, const Flow& flow);
bool is_valid_flow(const Network& net, const Flow& flow) noexcept;

// Subdigraph of arcs carrying positive flow, on the same vertex set. Its
// origin() maps each arc back to the ArcId in `net`.
Digraph support(const Network& net, const Flow& flow);

// Topological order of `d`, smallest vertex id first among ready vertices;
// nullopt when `d` has a directed cycle.
std::optional<std::vector<VertexId>> topological_order(const Digraph& d);
bool is_acyclic(const Digraph& d);

// Vertices reachable from `from` following arcs forward. Arcs with
// `arc_enabled[a] == false` are skipped when the mask is non-empty; the
// vertex `blocked` is never entered.
std::vector<bool> reachable_from(const Digraph& d, VertexId from,
                                 const std::vector<bool>& arc_enabled = {},
                                 VertexId blocked = kNoVertex);

// Vertices from which `to` is reachable (backward search).
std::vector<bool> reaching(const Digraph& d, VertexId to,
                           const std::vector<bool>& arc_enabled = {},
                           VertexId blocked = kNoVertex);

// Some s->t path as an arc list (BFS, smallest ArcId first); empty when t is
// unreachable or s == t.
std::vector<ArcId> bfs_path(const Digraph& d, VertexId s, VertexId t,
                            const std::vector<bool>& arc_enabled = {});

// Vertex sequence of an arc path starting at `start`.
std::vector<VertexId> path_vertices(const Digraph& d, VertexId start,
                                    std::span<const ArcId> arcs);

// Network restricted to the arcs with `keep[a]` set, same vertices and
// terminals; the result's digraph().origin() maps back to `net` ArcIds.
Network restrict_arcs(const Network& net, const std::vector<bool>& keep);

// Network with the same digraph and terminals but new capacities.
Network with_capacities(const Network& net, std::vector<Capacity> capacities);

}  // namespace flownet
