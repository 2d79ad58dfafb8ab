#include "triadic/digraph.hpp"

#include <algorithm>
#include <ostream>

namespace triadic {

namespace {

// Canonical form of one input pair: key = (min << 32) | max, dir = 0 when the
// edge runs min -> max, 1 otherwise.
struct CanonEdge {
  uint64_t key;
  uint32_t dir;
};

}  // namespace

Digraph Digraph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Digraph g;
  g.n_ = n;

  std::vector<CanonEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, w] : pairs) {
    if (u >= n || w >= n) throw ArgumentError("edge endpoint out of range");
    if (u == w) {
      ++g.stats_.self_loops_dropped;
      continue;
    }
    const Vertex lo = std::min(u, w), hi = std::max(u, w);
    edges.push_back({(static_cast<uint64_t>(lo) << 32) | hi, u > w});
  }
  std::sort(edges.begin(), edges.end(), [](const CanonEdge& a, const CanonEdge& b) {
    return a.key != b.key ? a.key < b.key : a.dir < b.dir;
  });

  // Collapse runs sharing a key; dir becomes 0 fwd, 1 bwd, 2 reciprocal.
  size_t merged = 0;
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    uint32_t flags = 0, distinct = 0;
    while (j < edges.size() && edges[j].key == edges[i].key) {
      const uint32_t bit = 1u << edges[j].dir;
      if (!(flags & bit)) ++distinct;
      flags |= bit;
      ++j;
    }
    g.stats_.duplicate_pairs_dropped += (j - i) - distinct;
    edges[merged++] = {edges[i].key, flags == 3 ? 2u : flags - 1u};
    i = j;
  }
  edges.resize(merged);

  std::vector<Count> dout(n, 0), din(n, 0), drec(n, 0);
  for (const auto& e : edges) {
    const Vertex lo = static_cast<Vertex>(e.key >> 32), hi = static_cast<Vertex>(e.key);
    switch (e.dir) {
      case 0: ++dout[lo], ++din[hi]; break;
      case 1: ++dout[hi], ++din[lo]; break;
      default: ++drec[lo], ++drec[hi], ++g.m_rec_;
    }
  }
  g.m_basic_ = merged - g.m_rec_;

  auto offsets = [n](const std::vector<Count>& deg) {
    std::vector<Count> off(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) off[v + 1] = off[v] + deg[v];
    return off;
  };
  g.out_off_ = offsets(dout);
  g.in_off_ = offsets(din);
  g.rec_off_ = offsets(drec);
  g.out_adj_.resize(g.out_off_[n]);
  g.in_adj_.resize(g.in_off_[n]);
  g.rec_adj_.resize(g.rec_off_[n]);

  // Edges are sorted by (min, max), so every neighbor list fills in
  // ascending order: for a fixed vertex, all smaller neighbors (where it is
  // the max endpoint) precede all larger ones.
  std::vector<Count> pout(g.out_off_.begin(), g.out_off_.end() - 1);
  std::vector<Count> pin(g.in_off_.begin(), g.in_off_.end() - 1);
  std::vector<Count> prec(g.rec_off_.begin(), g.rec_off_.end() - 1);
  for (const auto& e : edges) {
    const Vertex lo = static_cast<Vertex>(e.key >> 32), hi = static_cast<Vertex>(e.key);
    switch (e.dir) {
      case 0:
        g.out_adj_[pout[lo]++] = hi;
        g.in_adj_[pin[hi]++] = lo;
        break;
      case 1:
        g.out_adj_[pout[hi]++] = lo;
        g.in_adj_[pin[lo]++] = hi;
        break;
      default:
        g.rec_adj_[prec[lo]++] = hi;
        g.rec_adj_[prec[hi]++] = lo;
    }
  }
  return g;
}

Digraph build_digraph(std::span<const std::pair<int64_t, int64_t>> pairs) {
  std::vector<int64_t> labels;
  labels.reserve(pairs.size() * 2);
  for (const auto& [u, w] : pairs) {
    labels.push_back(u);
    labels.push_back(w);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > static_cast<size_t>(UINT32_MAX))
    throw ArgumentError("too many distinct vertex labels");

  auto id_of = [&](int64_t label) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) -
                               labels.begin());
  };
  std::vector<std::pair<Vertex, Vertex>> dense;
  dense.reserve(pairs.size());
  for (const auto& [u, w] : pairs) dense.emplace_back(id_of(u), id_of(w));

  Digraph g = Digraph::from_edges(static_cast<Vertex>(labels.size()), dense);
  const Vertex n = g.vertex_count();
  bool identity = true;
  for (Vertex v = 0; v < n && identity; ++v) identity = labels[v] == v;
  if (!identity) g.labels_ = std::move(labels);
  return g;
}

DegreeTriple Digraph::degrees(Vertex v) const {
  check_vertex(v);
  return {in_off_[v + 1] - in_off_[v], out_off_[v + 1] - out_off_[v],
          rec_off_[v + 1] - rec_off_[v]};
}

double Digraph::reciprocity() const {
  if (edge_count() == 0) throw UndefinedValueError("reciprocity of an empty graph");
  return static_cast<double>(m_rec_) / static_cast<double>(edge_count());
}

EdgeRelation Digraph::connecting_edge(Vertex u, Vertex w) const {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw ArgumentError("connecting_edge: identical endpoints");
  auto has = [this, w](std::span<const Vertex> list) {
    return std::binary_search(list.begin(), list.end(), w);
  };
  if (has(out_neighbors(u))) return EdgeRelation::Forward;
  if (has(in_neighbors(u))) return EdgeRelation::Backward;
  if (has(rec_neighbors(u))) return EdgeRelation::Reciprocal;
  return EdgeRelation::None;
}

void Digraph::write_edge_list(std::ostream& os) const {
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex w : out_neighbors(v)) os << label(v) << ' ' << label(w) << '\n';
    for (Vertex w : rec_neighbors(v)) os << label(v) << ' ' << label(w) << '\n';
  }
}

}  // namespace triadic
