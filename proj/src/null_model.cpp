#include "triadic/null_model.hpp"

#include <algorithm>

#include "triadic/parallel.hpp"
#include "triadic/rng.hpp"

namespace triadic {

namespace {

void check_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ArgumentError("reciprocity must be in [0,1]");
}

}  // namespace

std::array<double, kNumWedgeTypes> null_wedge_probs(double r) {
  check_r(r);
  const double q = 1.0 - r;
  const double q2 = q * q;
  std::array<double, kNumWedgeTypes> p{};
  p[static_cast<int>(WedgeType::Out)] = 0.25 * q2;
  p[static_cast<int>(WedgeType::Path)] = 0.5 * q2;
  p[static_cast<int>(WedgeType::In)] = 0.25 * q2;
  p[static_cast<int>(WedgeType::RecipIn)] = r * q;
  p[static_cast<int>(WedgeType::RecipOut)] = r * q;
  p[static_cast<int>(WedgeType::RecipTot)] = r * r;
  return p;
}

std::array<double, kNumTriangleTypes> null_triangle_probs(double r) {
  check_r(r);
  const double q = 1.0 - r;
  // Shared subexpressions keep the exact identities: trans is the double
  // 3 * loop, and out_recip == in_recip bitwise.
  const double loop = 0.25 * (q * q * q);
  const double one_recip_side = 0.75 * (r * (q * q));
  std::array<double, kNumTriangleTypes> p{};
  p[static_cast<int>(TriangleType::Trans)] = 3.0 * loop;
  p[static_cast<int>(TriangleType::Loop)] = loop;
  p[static_cast<int>(TriangleType::OutRecip)] = one_recip_side;
  p[static_cast<int>(TriangleType::PathRecip)] = 2.0 * one_recip_side;
  p[static_cast<int>(TriangleType::InRecip)] = one_recip_side;
  p[static_cast<int>(TriangleType::TwoRecip)] = 3.0 * (r * r) * q;
  p[static_cast<int>(TriangleType::ThreeRecip)] = r * r * r;
  return p;
}

NullPrediction null_prediction(double r) {
  return {r, null_wedge_probs(r), null_triangle_probs(r)};
}

std::vector<std::pair<Vertex, Vertex>> undirect(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.out_neighbors(v)) pairs.emplace_back(std::min(v, w), std::max(v, w));
    for (Vertex w : g.rec_neighbors(v))
      if (v < w) pairs.emplace_back(v, w);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

Digraph randomize_directions(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs, double r,
                             uint64_t seed, unsigned threads) {
  check_r(r);
  const double forward_cut = r + (1.0 - r) * 0.5;
  std::vector<uint8_t> rel(pairs.size());  // 0 lo->hi, 1 hi->lo, 2 reciprocal

  constexpr uint64_t kBlock = 4096;
  const uint64_t blocks = (pairs.size() + kBlock - 1) / kBlock;
  parallel_blocks(blocks, std::max(1u, threads), [&](uint64_t b, unsigned) {
    const size_t lo = b * kBlock;
    const size_t hi = std::min(pairs.size(), lo + kBlock);
    for (size_t i = lo; i < hi; ++i) {
      const Vertex a = std::min(pairs[i].first, pairs[i].second);
      const Vertex z = std::max(pairs[i].first, pairs[i].second);
      Rng rng(derive_seed(seed, a, z));
      const double u = rng.unit();
      rel[i] = u < r ? 2 : u < forward_cut ? 0 : 1;
    }
  });

  std::vector<std::pair<Vertex, Vertex>> directed;
  directed.reserve(pairs.size() * 2);
  for (size_t i = 0; i < pairs.size(); ++i) {
    const Vertex a = std::min(pairs[i].first, pairs[i].second);
    const Vertex z = std::max(pairs[i].first, pairs[i].second);
    switch (rel[i]) {
      case 0: directed.emplace_back(a, z); break;
      case 1: directed.emplace_back(z, a); break;
      default:
        directed.emplace_back(a, z);
        directed.emplace_back(z, a);
    }
  }
  return Digraph::from_edges(n, directed);
}

DeviationReport deviation_report(const Digraph& g, unsigned threads) {
  DeviationReport rep;
  rep.reciprocity = g.reciprocity();
  rep.observed = enumerate_triangle_census(g, threads);
  if (rep.observed.total == 0) throw UndefinedValueError("graph has no triangles");
  rep.predicted = null_triangle_probs(rep.reciprocity);
  for (int t = 0; t < kNumTriangleTypes; ++t) {
    rep.observed_fraction[t] = static_cast<double>(rep.observed.by_type[t]) /
                               static_cast<double>(rep.observed.total);
    rep.ratio[t] =
        rep.predicted[t] > 0 ? rep.observed_fraction[t] / rep.predicted[t] : 1.0;
  }
  return rep;
}

}  // namespace triadic
