#include "triadic/census.hpp"

#include <algorithm>
#include <span>
#include <vector>

#include "triadic/parallel.hpp"

namespace triadic {

WedgeCounts total_wedge_counts(const Digraph& g) {
  WedgeCounts wc;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto per = wedge_counts_at_vertex(g.degrees(v));
    for (int t = 0; t < kNumWedgeTypes; ++t) wc.by_type[t] += per[t];
  }
  for (Count c : wc.by_type) wc.total += c;
  return wc;
}

namespace {

constexpr EdgeRelation kRelFromCode[3] = {EdgeRelation::Forward, EdgeRelation::Backward,
                                          EdgeRelation::Reciprocal};

// Adjacency restricted to edges owned by each vertex under the
// (total degree, id) order, with the relation seen from the owner.
struct OwnedEdges {
  std::vector<Count> off;
  std::vector<Vertex> nbr;
  std::vector<uint8_t> rel;  // 0 out, 1 in, 2 reciprocal
};

OwnedEdges assign_edges(const Digraph& g) {
  const Vertex n = g.vertex_count();
  std::vector<uint64_t> rank(n);
  for (Vertex v = 0; v < n; ++v)
    rank[v] = (static_cast<uint64_t>(g.degrees(v).dtotal()) << 32) | v;

  OwnedEdges owned;
  owned.off.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    Count c = 0;
    for (Vertex w : g.out_neighbors(v)) c += rank[v] < rank[w];
    for (Vertex w : g.in_neighbors(v)) c += rank[v] < rank[w];
    for (Vertex w : g.rec_neighbors(v)) c += rank[v] < rank[w];
    owned.off[v + 1] = owned.off[v] + c;
  }
  owned.nbr.resize(owned.off[n]);
  owned.rel.resize(owned.off[n]);
  for (Vertex v = 0; v < n; ++v) {
    Count p = owned.off[v];
    auto take = [&](std::span<const Vertex> list, uint8_t code) {
      for (Vertex w : list)
        if (rank[v] < rank[w]) {
          owned.nbr[p] = w;
          owned.rel[p] = code;
          ++p;
        }
    };
    take(g.out_neighbors(v), 0);
    take(g.in_neighbors(v), 1);
    take(g.rec_neighbors(v), 2);
  }
  return owned;
}

}  // namespace

TriangleCounts enumerate_triangle_census(const Digraph& g, unsigned threads) {
  const Vertex n = g.vertex_count();
  const OwnedEdges owned = assign_edges(g);
  threads = std::max(1u, threads);

  constexpr Vertex kBlock = 256;
  const uint64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::array<Count, kNumTriangleTypes>> local(threads);
  for (auto& a : local) a.fill(0);

  parallel_blocks(blocks, threads, [&](uint64_t b, unsigned worker) {
    auto& counts = local[worker];
    const Vertex lo = static_cast<Vertex>(b * kBlock);
    const Vertex hi = static_cast<Vertex>(std::min<uint64_t>(n, (b + 1) * kBlock));
    for (Vertex v = lo; v < hi; ++v) {
      const Count begin = owned.off[v], end = owned.off[v + 1];
      for (Count i = begin; i < end; ++i) {
        const Vertex u = owned.nbr[i];
        const EdgeRelation rvu = kRelFromCode[owned.rel[i]];
        for (Count j = i + 1; j < end; ++j) {
          const Vertex w = owned.nbr[j];
          const EdgeRelation ruw = g.connecting_edge(u, w);
          if (ruw == EdgeRelation::None) continue;
          const EdgeRelation rvw = kRelFromCode[owned.rel[j]];
          const TriangleType tau = classify_triangle_any(v, u, w, rvu, rvw, ruw);
          ++counts[static_cast<int>(tau)];
        }
      }
    }
  });

  TriangleCounts tc;
  for (const auto& a : local)
    for (int t = 0; t < kNumTriangleTypes; ++t) tc.by_type[t] += a[t];
  for (Count c : tc.by_type) tc.total += c;
  return tc;
}

TriangleCounts brute_force_census(const Digraph& g, Vertex cap) {
  const Vertex n = g.vertex_count();
  if (n > cap) throw ArgumentError("brute_force_census: graph exceeds the vertex cap");
  TriangleCounts tc;
  if (n < 3) return tc;
  for (Vertex u = 0; u + 2 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const EdgeRelation ruv = g.connecting_edge(u, v);
      if (ruv == EdgeRelation::None) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        const EdgeRelation ruw = g.connecting_edge(u, w);
        if (ruw == EdgeRelation::None) continue;
        const EdgeRelation rvw = g.connecting_edge(v, w);
        if (rvw == EdgeRelation::None) continue;
        ++tc.by_type[static_cast<int>(classify_triangle(ruv, ruw, rvw))];
      }
    }
  }
  for (Count c : tc.by_type) tc.total += c;
  return tc;
}

CensusReport closures(const Digraph& g, unsigned threads) {
  CensusReport rep;
  rep.wedges = total_wedge_counts(g);
  rep.triangles = enumerate_triangle_census(g, threads);
  rep.reciprocity = g.edge_count() ? g.reciprocity() : 0.0;
  rep.transitivity = rep.wedges.total
                         ? 3.0 * static_cast<double>(rep.triangles.total) /
                               static_cast<double>(rep.wedges.total)
                         : 0.0;
  for (int p = 0; p < kNumWedgeTypes; ++p) {
    const Count w = rep.wedges.by_type[p];
    rep.empty_wedge_class[p] = w == 0;
    rep.wedge_percentages[p] =
        rep.wedges.total ? 100.0 * static_cast<double>(w) / static_cast<double>(rep.wedges.total)
                         : 0.0;
    if (w == 0) continue;
    for (int t = 0; t < kNumTriangleTypes; ++t) {
      const int x = chi(static_cast<WedgeType>(p), static_cast<TriangleType>(t));
      if (x == 0) continue;
      rep.closures[p][t] =
          static_cast<double>(x) * static_cast<double>(rep.triangles.by_type[t]) /
          static_cast<double>(w);
    }
  }
  for (int t = 0; t < kNumTriangleTypes; ++t)
    rep.triangle_percentages[t] =
        rep.triangles.total ? 100.0 * static_cast<double>(rep.triangles.by_type[t]) /
                                  static_cast<double>(rep.triangles.total)
                            : 0.0;
  return rep;
}

double recip_group_closure(const WedgeCounts& wedges, const TriangleCounts& triangles, int k) {
  static constexpr WedgeType kNone[] = {WedgeType::Out, WedgeType::Path, WedgeType::In};
  static constexpr WedgeType kOne[] = {WedgeType::RecipIn, WedgeType::RecipOut};
  static constexpr WedgeType kTwo[] = {WedgeType::RecipTot};
  if (k < 0 || k > 2) throw ArgumentError("recip_group_closure: k must be 0, 1, or 2");
  const std::span<const WedgeType> group = k == 0 ? std::span<const WedgeType>(kNone)
                                         : k == 1 ? std::span<const WedgeType>(kOne)
                                                  : std::span<const WedgeType>(kTwo);

  Count closed = 0, total = 0;
  for (const WedgeType psi : group) {
    total += wedges[psi];
    for (TriangleType tau : kAllTriangleTypes)
      closed += static_cast<Count>(chi(psi, tau)) * triangles[tau];
  }
  if (total == 0)
    throw UndefinedValueError("no wedges with " + std::to_string(k) + " reciprocal edges");
  return static_cast<double>(closed) / static_cast<double>(total);
}

double recip_group_closure(const Digraph& g, int k) {
  return recip_group_closure(total_wedge_counts(g), enumerate_triangle_census(g), k);
}

std::array<double, 4> cyclic_breakdown(const TriangleCounts& triangles) {
  Count total = 0;
  for (TriangleType tau : kCyclicTypes) total += triangles[tau];
  if (total == 0) throw UndefinedValueError("no cycle-containing triangles");
  std::array<double, 4> out{};
  for (size_t i = 0; i < kCyclicTypes.size(); ++i)
    out[i] = static_cast<double>(triangles[kCyclicTypes[i]]) / static_cast<double>(total);
  return out;
}

std::array<double, 4> cyclic_breakdown(const Digraph& g) {
  return cyclic_breakdown(enumerate_triangle_census(g));
}

}  // namespace triadic
