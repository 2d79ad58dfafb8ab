#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "triadic/errors.hpp"
#include "triadic/types.hpp"

namespace triadic {

struct IngestStats {
  Count self_loops_dropped = 0;
  Count duplicate_pairs_dropped = 0;
};

// Immutable digraph in which every mutual pair {(u,w),(w,u)} is merged into
// one reciprocal edge, so each vertex pair carries exactly one relation.
// Adjacency is CSR with sorted neighbor lists per relation class; immutable
// after construction and safe to share across threads.
class Digraph {
 public:
  Digraph() = default;

  // pairs are dense vertex ids < n. Self-loops are dropped and ordered
  // duplicates deduplicated (both counted), mutual pairs merged.
  static Digraph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Digraph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  Vertex vertex_count() const { return n_; }
  Count basic_edges() const { return m_basic_; }
  Count reciprocal_edges() const { return m_rec_; }
  // A merged reciprocal edge counts once. This convention feeds reciprocity().
  Count edge_count() const { return m_basic_ + m_rec_; }
  const IngestStats& ingest_stats() const { return stats_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return slice(out_adj_, out_off_, v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return slice(in_adj_, in_off_, v); }
  std::span<const Vertex> rec_neighbors(Vertex v) const { return slice(rec_adj_, rec_off_, v); }

  DegreeTriple degrees(Vertex v) const;
  double reciprocity() const;
  EdgeRelation connecting_edge(Vertex u, Vertex w) const;

  // Original ingestion label; identity when built from dense ids.
  int64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }

  // One "u w" line per basic edge and two per reciprocal edge, using
  // original labels. Rebuilding from this listing reproduces the graph
  // (isolated vertices excepted; they appear on no line).
  void write_edge_list(std::ostream& os) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && m_basic_ == other.m_basic_ && m_rec_ == other.m_rec_ &&
           out_off_ == other.out_off_ && in_off_ == other.in_off_ && rec_off_ == other.rec_off_ &&
           out_adj_ == other.out_adj_ && in_adj_ == other.in_adj_ && rec_adj_ == other.rec_adj_ &&
           labels_ == other.labels_;
  }

 private:
  std::span<const Vertex> slice(const std::vector<Vertex>& adj, const std::vector<Count>& off,
                                Vertex v) const {
    return {adj.data() + off[v], adj.data() + off[v + 1]};
  }
  void check_vertex(Vertex v) const {
    if (v >= n_) throw ArgumentError("vertex id out of range");
  }

  Vertex n_ = 0;
  Count m_basic_ = 0;
  Count m_rec_ = 0;
  std::vector<Count> out_off_ = {0}, in_off_ = {0}, rec_off_ = {0};
  std::vector<Vertex> out_adj_, in_adj_, rec_adj_;
  std::vector<int64_t> labels_;  // sorted; empty means identity
  IngestStats stats_;

  friend Digraph build_digraph(std::span<const std::pair<int64_t, int64_t>> pairs);
};

// Remaps arbitrary integer labels to dense ids by ascending label order
// (so the result is independent of input listing order), then builds.
Digraph build_digraph(std::span<const std::pair<int64_t, int64_t>> pairs);

}  // namespace triadic
