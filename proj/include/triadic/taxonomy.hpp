#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

#include "triadic/errors.hpp"
#include "triadic/types.hpp"

namespace triadic {

// The six wedge types, keyed by the relations of the two edges at the
// center: {out,out}, {in,out}, {in,in}, {recip,in}, {recip,out}, {recip,recip}.
enum class WedgeType : uint8_t { Out, Path, In, RecipIn, RecipOut, RecipTot };

// The seven triangle types, keyed by the number of reciprocal edges
// (0, 1, 2, 3) and, within 0 and 1, by orientation.
enum class TriangleType : uint8_t {
  Trans,       // 0 recip, acyclic
  Loop,        // 0 recip, directed 3-cycle
  OutRecip,    // 1 recip, both basic edges leave the third vertex
  PathRecip,   // 1 recip, one basic edge in and one out at the third vertex
  InRecip,     // 1 recip, both basic edges enter the third vertex
  TwoRecip,    // 2 recip
  ThreeRecip,  // 3 recip
};

inline constexpr int kNumWedgeTypes = 6;
inline constexpr int kNumTriangleTypes = 7;

inline constexpr std::array<WedgeType, kNumWedgeTypes> kAllWedgeTypes = {
    WedgeType::Out,     WedgeType::Path,     WedgeType::In,
    WedgeType::RecipIn, WedgeType::RecipOut, WedgeType::RecipTot,
};

inline constexpr std::array<TriangleType, kNumTriangleTypes> kAllTriangleTypes = {
    TriangleType::Trans,    TriangleType::Loop,     TriangleType::OutRecip,
    TriangleType::PathRecip, TriangleType::InRecip, TriangleType::TwoRecip,
    TriangleType::ThreeRecip,
};

constexpr std::string_view name(WedgeType psi) {
  constexpr std::string_view names[] = {"out", "path", "in", "recip_in", "recip_out", "recip_tot"};
  return names[static_cast<int>(psi)];
}

constexpr std::string_view name(TriangleType tau) {
  constexpr std::string_view names[] = {"trans",    "loop",      "out_recip", "path_recip",
                                        "in_recip", "two_recip", "three_recip"};
  return names[static_cast<int>(tau)];
}

// chi(psi, tau): how many psi-wedges one tau-triangle contains.
// Each column sums to 3 (a triangle has one wedge per vertex).
constexpr int chi(WedgeType psi, TriangleType tau) {
  constexpr int table[kNumWedgeTypes][kNumTriangleTypes] = {
      //                 trans loop outR pathR inR 2R 3R
      /* out       */ {1, 0, 1, 0, 0, 0, 0},
      /* path      */ {1, 3, 0, 1, 0, 0, 0},
      /* in        */ {1, 0, 0, 0, 1, 0, 0},
      /* recip_in  */ {0, 0, 2, 1, 0, 1, 0},
      /* recip_out */ {0, 0, 0, 1, 2, 1, 0},
      /* recip_tot */ {0, 0, 0, 0, 0, 1, 3},
  };
  return table[static_cast<int>(psi)][static_cast<int>(tau)];
}

// The 15 (psi, tau) pairs with chi != 0, in row-major order. This is the
// canonical ordering used by reports and serialization.
struct ClosurePair {
  WedgeType psi;
  TriangleType tau;
};

constexpr std::array<ClosurePair, 15> closure_pairs() {
  std::array<ClosurePair, 15> pairs{};
  int k = 0;
  for (WedgeType psi : kAllWedgeTypes)
    for (TriangleType tau : kAllTriangleTypes)
      if (chi(psi, tau) != 0) pairs[k++] = {psi, tau};
  return pairs;
}

inline constexpr std::array<ClosurePair, 15> kClosurePairs = closure_pairs();

// Wedges centered at a vertex with the given degrees, by type.
constexpr std::array<Count, kNumWedgeTypes> wedge_counts_at_vertex(const DegreeTriple& d) {
  auto c2 = [](Count x) { return x * (x - 1) / 2; };
  std::array<Count, kNumWedgeTypes> w{};
  w[static_cast<int>(WedgeType::Out)] = c2(d.dout);
  w[static_cast<int>(WedgeType::Path)] = d.din * d.dout;
  w[static_cast<int>(WedgeType::In)] = c2(d.din);
  w[static_cast<int>(WedgeType::RecipIn)] = d.din * d.drec;
  w[static_cast<int>(WedgeType::RecipOut)] = d.dout * d.drec;
  w[static_cast<int>(WedgeType::RecipTot)] = c2(d.drec);
  return w;
}

namespace detail {

// Classification on a canonically ordered triple u < v < w with relations
// r12 = (u,v), r13 = (u,w), r23 = (v,w), all != None.
constexpr TriangleType classify_raw(EdgeRelation r12, EdgeRelation r13, EdgeRelation r23) {
  using E = EdgeRelation;
  const int nrec = (r12 == E::Reciprocal) + (r13 == E::Reciprocal) + (r23 == E::Reciprocal);
  if (nrec == 3) return TriangleType::ThreeRecip;
  if (nrec == 2) return TriangleType::TwoRecip;
  if (nrec == 0) {
    // A 3-cycle iff every vertex has exactly one outgoing edge.
    const int out_u = (r12 == E::Forward) + (r13 == E::Forward);
    const int out_v = (r12 == E::Backward) + (r23 == E::Forward);
    const int out_w = (r13 == E::Backward) + (r23 == E::Backward);
    return (out_u == 1 && out_v == 1 && out_w == 1) ? TriangleType::Loop : TriangleType::Trans;
  }
  // One reciprocal edge: orient the two basic edges at the vertex opposite
  // to it. Both leaving -> OutRecip, both entering -> InRecip, else PathRecip.
  int apex_out = 0;
  if (r12 == E::Reciprocal) {
    apex_out = (r13 == E::Backward) + (r23 == E::Backward);
  } else if (r13 == E::Reciprocal) {
    apex_out = (r12 == E::Backward) + (r23 == E::Forward);
  } else {
    apex_out = (r12 == E::Forward) + (r13 == E::Forward);
  }
  if (apex_out == 2) return TriangleType::OutRecip;
  if (apex_out == 0) return TriangleType::InRecip;
  return TriangleType::PathRecip;
}

constexpr std::array<TriangleType, 27> make_triangle_table() {
  std::array<TriangleType, 27> t{};
  constexpr EdgeRelation rels[] = {EdgeRelation::Forward, EdgeRelation::Backward,
                                   EdgeRelation::Reciprocal};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) t[a * 9 + b * 3 + c] = classify_raw(rels[a], rels[b], rels[c]);
  return t;
}

inline constexpr std::array<TriangleType, 27> kTriangleTable = make_triangle_table();

}  // namespace detail

// Relations must be given on the sorted vertex triple u < v < w as
// r12 = (u,v), r13 = (u,w), r23 = (v,w).
constexpr TriangleType classify_triangle(EdgeRelation r12, EdgeRelation r13, EdgeRelation r23) {
  using E = EdgeRelation;
  if (r12 == E::None || r13 == E::None || r23 == E::None)
    throw ArgumentError("classify_triangle: a vertex pair has no edge");
  const int i = (static_cast<int>(r12) - 1) * 9 + (static_cast<int>(r13) - 1) * 3 +
                (static_cast<int>(r23) - 1);
  return detail::kTriangleTable[i];
}

// Same, but for an arbitrarily ordered triple; relations are flipped as the
// vertices are sorted.
constexpr TriangleType classify_triangle_any(Vertex u, Vertex v, Vertex w, EdgeRelation ruv,
                                             EdgeRelation ruw, EdgeRelation rvw) {
  auto swap12 = [&] {
    std::swap(u, v);
    ruv = reversed(ruv);
    std::swap(ruw, rvw);
  };
  auto swap23 = [&] {
    std::swap(v, w);
    rvw = reversed(rvw);
    std::swap(ruv, ruw);
  };
  if (u > v) swap12();
  if (v > w) swap23();
  if (u > v) swap12();
  return classify_triangle(ruv, ruw, rvw);
}

}  // namespace triadic
