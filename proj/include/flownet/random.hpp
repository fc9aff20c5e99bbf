#pragma once

#include <cstdint>
#include <random>

#include "flownet/cnf.hpp"
#include "flownet/netcore.hpp"

namespace flownet {

struct RandomNetworkOptions {
  VertexId min_vertices = 2;
  VertexId max_vertices = 8;
  ArcId min_arcs = 1;
  ArcId max_arcs = 14;
  Capacity max_capacity = 4;
  bool acyclic = false;  // arcs only go from lower to higher ids
  bool unit = false;     // all capacities 1
};

// Source is vertex 0 and sink the last vertex. Parallel arcs may occur.
Network random_network(std::mt19937_64& rng, const RandomNetworkOptions& options = {});
Network random_network(std::uint64_t seed, const RandomNetworkOptions& options = {});

// Random valid flow on `net`: a max flow restricted to random capacities,
// plus random cycles when the digraph has any.
Flow random_flow(std::mt19937_64& rng, const Network& net);

// Formula with n variables and m clauses of 3 uniformly drawn literals.
CnfFormula random_cnf(std::mt19937_64& rng, int n, int m);

}  // namespace flownet
