#pragma once

#include <cstdint>

namespace triadic {

using Vertex = uint32_t;
using Count = uint64_t;

// Relation of an ordered vertex pair (u, w). Exactly one holds per pair.
enum class EdgeRelation : uint8_t {
  None,
  Forward,   // basic edge u -> w
  Backward,  // basic edge w -> u
  Reciprocal,
};

// Mirror under swapping the query pair: Forward <-> Backward.
constexpr EdgeRelation reversed(EdgeRelation r) {
  switch (r) {
    case EdgeRelation::Forward: return EdgeRelation::Backward;
    case EdgeRelation::Backward: return EdgeRelation::Forward;
    default: return r;
  }
}

struct DegreeTriple {
  Count din = 0;
  Count dout = 0;
  Count drec = 0;
  constexpr Count dtotal() const { return din + dout + drec; }
  constexpr bool operator==(const DegreeTriple&) const = default;
};

}  // namespace triadic
