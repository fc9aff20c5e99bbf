#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "flownet/netcore.hpp"

namespace flownet::testing {

// Network from 0-based arc triples; source 0, sink n-1 unless given.
inline Network make_net(VertexId n, const std::vector<std::vector<std::int64_t>>& arcs,
                        VertexId s = 0, VertexId t = kNoVertex) {
  std::vector<Arc> list;
  std::vector<Capacity> caps;
  for (const auto& a : arcs) {
    list.push_back({static_cast<VertexId>(a[0]), static_cast<VertexId>(a[1])});
    caps.push_back(a[2]);
  }
  return Network(Digraph(n, std::move(list)), s, t == kNoVertex ? n - 1 : t, std::move(caps));
}

// Capacity of every (s,t)-cut by subset enumeration.
inline std::vector<std::pair<unsigned, Capacity>> all_cuts(const Network& net) {
  const VertexId n = net.vertex_count();
  std::vector<std::pair<unsigned, Capacity>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> net.source() & 1u) || (mask >> net.sink() & 1u)) continue;
    Capacity c = 0;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      if ((mask >> net.arc(a).tail & 1u) && !(mask >> net.arc(a).head & 1u)) c += net.capacity(a);
    }
    out.emplace_back(mask, c);
  }
  return out;
}

inline Capacity brute_min_cut(const Network& net) {
  Capacity best = -1;
  for (const auto& [mask, c] : all_cuts(net)) {
    if (best < 0 || c < best) best = c;
  }
  return best;
}

// Arcs in at least one minimum cut, by enumeration.
inline std::vector<ArcId> brute_mincut_arcs(const Network& net) {
  const Capacity best = brute_min_cut(net);
  std::vector<bool> in(static_cast<std::size_t>(net.arc_count()), false);
  for (const auto& [mask, c] : all_cuts(net)) {
    if (c != best) continue;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      if ((mask >> net.arc(a).tail & 1u) && !(mask >> net.arc(a).head & 1u)) in[static_cast<std::size_t>(a)] = true;
    }
  }
  std::vector<ArcId> out;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (in[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

// Largest minimum arc capacity over all simple s->t paths (0 when none).
inline Capacity brute_widest(const Network& net) {
  const Digraph& d = net.digraph();
  Capacity best = 0;
  std::vector<bool> on(static_cast<std::size_t>(d.vertex_count()), false);
  auto dfs = [&](auto&& self, VertexId v, Capacity bottleneck) -> void {
    if (v == net.sink()) {
      best = std::max(best, bottleneck);
      return;
    }
    on[static_cast<std::size_t>(v)] = true;
    for (ArcId a : d.out_arcs(v)) {
      const VertexId w = d.arc(a).head;
      if (!on[static_cast<std::size_t>(w)]) self(self, w, std::min(bottleneck, net.capacity(a)));
    }
    on[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, net.source(), std::numeric_limits<Capacity>::max());
  return best;
}

}  // namespace flownet::testing
