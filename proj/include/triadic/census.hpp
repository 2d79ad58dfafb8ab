#pragma once

#include <array>

#include "triadic/digraph.hpp"
#include "triadic/taxonomy.hpp"

namespace triadic {

struct WedgeCounts {
  std::array<Count, kNumWedgeTypes> by_type{};
  Count total = 0;
  Count operator[](WedgeType psi) const { return by_type[static_cast<int>(psi)]; }
};

struct TriangleCounts {
  std::array<Count, kNumTriangleTypes> by_type{};
  Count total = 0;
  Count operator[](TriangleType tau) const { return by_type[static_cast<int>(tau)]; }
};

// Exact census plus the derived closure statistics.
struct CensusReport {
  WedgeCounts wedges;
  TriangleCounts triangles;
  double reciprocity = 0;  // 0 on an edgeless graph
  double transitivity = 0; // 3|T|/|W|, 0 when |W| = 0
  // closures[psi][tau] = chi(psi,tau)|T_tau| / |W_psi|; 0 where chi = 0 and,
  // by convention, 0 for empty wedge classes (flagged below).
  std::array<std::array<double, kNumTriangleTypes>, kNumWedgeTypes> closures{};
  std::array<double, kNumWedgeTypes> wedge_percentages{};
  std::array<double, kNumTriangleTypes> triangle_percentages{};
  std::array<bool, kNumWedgeTypes> empty_wedge_class{};

  double closure(WedgeType psi, TriangleType tau) const {
    return closures[static_cast<int>(psi)][static_cast<int>(tau)];
  }
};

// |W_psi| for all six types via the per-vertex degree formulas; O(n).
WedgeCounts total_wedge_counts(const Digraph& g);

// Exact |T_tau| for all seven types. Each edge is owned by its endpoint
// with the smaller (total degree, id) key; a vertex tests closure only for
// pairs of edges it owns, so every triangle is found exactly once, at its
// key-minimal vertex. Bit-identical results for any thread count.
TriangleCounts enumerate_triangle_census(const Digraph& g, unsigned threads = 1);

// O(n^3) testing oracle; refuses graphs larger than cap.
TriangleCounts brute_force_census(const Digraph& g, Vertex cap = 2000);

CensusReport closures(const Digraph& g, unsigned threads = 1);

// Fraction of wedges with k reciprocal edges (k = 0: {out, path, in};
// k = 1: {recip_in, recip_out}; k = 2: {recip_tot}) that close into any
// triangle. Throws UndefinedValueError when the group is empty.
double recip_group_closure(const WedgeCounts& wedges, const TriangleCounts& triangles, int k);
double recip_group_closure(const Digraph& g, int k);

// The four triangle types containing a directed 3-cycle.
inline constexpr std::array<TriangleType, 4> kCyclicTypes = {
    TriangleType::Loop, TriangleType::PathRecip, TriangleType::TwoRecip, TriangleType::ThreeRecip};

// Fractions over all cycle-containing triangles, aligned with kCyclicTypes;
// sums to 1. Throws UndefinedValueError when there are none.
std::array<double, 4> cyclic_breakdown(const TriangleCounts& triangles);
std::array<double, 4> cyclic_breakdown(const Digraph& g);

}  // namespace triadic
