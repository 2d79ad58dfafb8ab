#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "triadic/census.hpp"
#include "triadic/digraph.hpp"
#include "triadic/taxonomy.hpp"

namespace triadic {

// Analytic type distributions when each undirected edge independently
// becomes reciprocal with probability r and one-way with probability
// (1-r)/2 per direction. Each map sums to 1.
struct NullPrediction {
  double r = 0;
  std::array<double, kNumWedgeTypes> wedge_probs{};
  std::array<double, kNumTriangleTypes> triangle_probs{};
};

std::array<double, kNumWedgeTypes> null_wedge_probs(double r);
std::array<double, kNumTriangleTypes> null_triangle_probs(double r);
NullPrediction null_prediction(double r);

// Every edge collapsed to its unordered endpoint pair, as sorted
// (min, max) pairs; |result| = edge_count().
std::vector<std::pair<Vertex, Vertex>> undirect(const Digraph& g);

// Independent per-edge assignment: reciprocal with probability r, else a
// coin flip for direction. The random stream is keyed by (seed, min, max)
// per pair, so the result does not depend on pair order or thread count.
Digraph randomize_directions(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs, double r,
                             uint64_t seed, unsigned threads = 1);

// Observed triangle-type fractions against the prediction at the graph's
// own reciprocity. ratio = observed/predicted, and 1 where both are 0
// (types unreachable at this r).
struct DeviationReport {
  double reciprocity = 0;
  TriangleCounts observed;
  std::array<double, kNumTriangleTypes> observed_fraction{};
  std::array<double, kNumTriangleTypes> predicted{};
  std::array<double, kNumTriangleTypes> ratio{};
};

// Throws UndefinedValueError on a triangle-free (or edgeless) graph.
DeviationReport deviation_report(const Digraph& g, unsigned threads = 1);

}  // namespace triadic
