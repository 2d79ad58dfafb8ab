#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triadic/census.hpp"
#include "triadic/digraph.hpp"
#include "triadic/rng.hpp"
#include "triadic/taxonomy.hpp"

namespace triadic {

// Endpoint roles are fixed per type: Path has end1 -> center -> end2;
// RecipIn/RecipOut have end1 reciprocal and end2 basic (in/out); the
// symmetric types (Out, In, RecipTot) treat {end1, end2} as unordered.
struct Wedge {
  Vertex center;
  Vertex end1;
  Vertex end2;
  WedgeType wtype;
};

// Draws wedges uniformly from W_psi: the center is chosen with probability
// proportional to its per-vertex wedge count (binary search over a prefix
// sum), then endpoints uniformly from the relevant neighbor lists.
class WedgeSampler {
 public:
  // Throws UndefinedValueError when the graph has no psi-wedges.
  WedgeSampler(const Digraph& g, WedgeType psi);

  WedgeType wedge_type() const { return psi_; }
  Count total() const { return total_; }
  Wedge sample(Rng& rng) const;

 private:
  const Digraph* g_;
  WedgeType psi_;
  Count total_ = 0;
  std::vector<Count> cumulative_;  // inclusive prefix sums, one per vertex
};

inline WedgeSampler build_sampler(const Digraph& g, WedgeType psi) { return {g, psi}; }
inline Wedge sample_wedge(const WedgeSampler& s, Rng& rng) { return s.sample(rng); }

// The triangle type the wedge closes into, or nullopt when its endpoints
// are not connected. A wedge closes into at most one type.
std::optional<TriangleType> is_closed(const Digraph& g, const Wedge& w);

// Samples needed for |estimate - truth| <= eps with probability >= 1-delta:
// ceil(ln(2/delta) / (2 eps^2)).
Count hoeffding_k(double eps, double delta);

// Guaranteed half-width after k samples at confidence 1-delta.
double hoeffding_error(Count k, double delta);

struct ClosureEstimate {
  WedgeType psi;
  std::optional<TriangleType> tau;  // nullopt: closure into any triangle
  Count k = 0;
  Count k_closed = 0;
  double kappa_hat = 0;
  double delta = 0;
  double eps_bound = 0;
};

// One shared sample of k wedges yields estimates for every tau with
// chi(psi,tau) != 0 plus a total-closure estimate (tau = nullopt, last).
// Identical results for a given seed regardless of thread count.
std::vector<ClosureEstimate> estimate_closures(const Digraph& g, WedgeType psi, Count k,
                                               double delta, uint64_t seed, unsigned threads = 1);

struct TriangleEstimate {
  TriangleType tau;
  WedgeType psi_used;
  Count k = 0;
  double kappa_hat = 0;
  double t_hat = 0;            // kappa_hat |W_psi| / chi(psi,tau)
  double abs_error_bound = 0;  // hoeffding_error(k, delta) |W_psi| / chi(psi,tau)
  double delta = 0;
  // An eligible wedge class was empty, which certifies t_hat = 0 with no
  // sampling error (chi >= 1 means any such triangle would contain one).
  bool exact_zero = false;
};

// psi = nullopt selects the eligible type minimizing |W_psi|/chi(psi,tau),
// the tightest available bound. Explicit psi with chi(psi,tau) = 0 is an
// error.
TriangleEstimate estimate_triangles(const Digraph& g, TriangleType tau,
                                    std::optional<WedgeType> psi, Count k, double delta,
                                    uint64_t seed, unsigned threads = 1);

// The smallest wedge-type set able to estimate all seven triangle types.
inline constexpr std::array<WedgeType, 4> kCoveringWedgeTypes = {
    WedgeType::Path, WedgeType::RecipIn, WedgeType::RecipOut, WedgeType::RecipTot};

struct EstimatedCensus {
  WedgeCounts wedges;  // exact; only triangle statistics are sampled
  std::array<double, kNumTriangleTypes> triangle_estimates{};
  std::array<double, kNumTriangleTypes> triangle_bounds{};
  std::array<WedgeType, kNumTriangleTypes> estimate_source{};
  std::array<bool, kNumTriangleTypes> exact_zero{};
  double total_triangles = 0;
  double total_bound = 0;
  double reciprocity = 0;
  double transitivity = 0;  // 3 sum(T_hat) / |W|
  std::array<std::array<double, kNumTriangleTypes>, kNumWedgeTypes> closures{};
  std::array<double, kNumWedgeTypes> wedge_percentages{};
  std::array<double, kNumTriangleTypes> triangle_percentages{};
  std::array<bool, kNumWedgeTypes> empty_wedge_class{};
  std::vector<WedgeType> sampled_types;
  Count k = 0;
  double delta = 0;
  double eps_bound = 0;
  uint64_t seed = 0;

  double closure(WedgeType psi, TriangleType tau) const {
    return closures[static_cast<int>(psi)][static_cast<int>(tau)];
  }
};

// Samples each covering wedge type once (k wedges each). Triangle estimates
// come from the covering type with the tightest bound; closures of
// non-sampled types are reconstructed as chi(psi,tau) T_hat / |W_psi| from
// their exact wedge counts. Empty wedge classes contribute exact zeros.
EstimatedCensus full_estimated_census(const Digraph& g, Count k, double delta, uint64_t seed,
                                      unsigned threads = 1);

}  // namespace triadic
