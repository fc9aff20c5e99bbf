#pragma once

#include <cstdint>
#include <vector>

#include "flownet/decomp.hpp"
#include "flownet/netcore.hpp"
#include "flownet/variant.hpp"

namespace flownet {

// Exact rational in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// H(p) = 1 + 1/2 + ... + 1/p. Throws InputError for p < 1 or when the
// result overflows 64 bits.
Rational harmonic(int p);

// True iff H(p) * value >= optimum.
bool within_harmonic_bound(Capacity value, Capacity optimum, int p);

// D_nu: arcs with capacity < nu are removed; the others are repeated
// floor(c/nu) times (unrestricted) or kept once (disjoint variants). Each
// arc's origin is the ArcId it copies.
Digraph build_D_nu(const Network& net, Capacity nu, SplitVariant variant);

// Whether D_nu holds i s->t paths that are arc-disjoint (unrestricted and
// arc variants; copies count as distinct arcs) or internally
// vertex-disjoint (vertex variant).
bool has_disjoint_paths(const Network& net, Capacity nu, int i, SplitVariant variant);

struct PSplitSolution {
  Flow flow;
  std::vector<FlowComponent> paths;  // each carries nu_star units
  int p_used = 0;
  Capacity nu_star = 0;
  int i_star = 0;
  std::vector<Capacity> c;  // c[i-1] = largest feasible nu for i paths, 0 if none
};

// Best of the flows x_i sending c_i units along each of i disjoint paths of
// D_{c_i}, i = 1..p, with c_i found by binary search; ties go to the smallest
// i. The value is at least 1/H(p) of the optimum. Value 0 when t is
// unreachable.
PSplitSolution approx_p_split(const Network& net, int p, SplitVariant variant);

}  // namespace flownet
