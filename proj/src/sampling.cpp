#include "triadic/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "triadic/parallel.hpp"

namespace triadic {

WedgeSampler::WedgeSampler(const Digraph& g, WedgeType psi) : g_(&g), psi_(psi) {
  cumulative_.resize(g.vertex_count());
  Count run = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    run += wedge_counts_at_vertex(g.degrees(v))[static_cast<int>(psi)];
    cumulative_[v] = run;
  }
  total_ = run;
  if (total_ == 0)
    throw UndefinedValueError(std::string("no wedges of type ") + std::string(name(psi)));
}

Wedge WedgeSampler::sample(Rng& rng) const {
  const Count x = rng.below(total_);
  const Vertex v = static_cast<Vertex>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), x) - cumulative_.begin());
  Wedge w{v, 0, 0, psi_};

  auto pick = [&rng](std::span<const Vertex> list) { return list[rng.below(list.size())]; };
  // Two distinct indices via rejection: uniform over unordered pairs.
  auto pick_two = [&rng](std::span<const Vertex> list, Vertex& a, Vertex& b) {
    for (;;) {
      const uint64_t i = rng.below(list.size());
      const uint64_t j = rng.below(list.size());
      if (i != j) {
        a = list[i];
        b = list[j];
        return;
      }
    }
  };

  switch (psi_) {
    case WedgeType::Out:
      pick_two(g_->out_neighbors(v), w.end1, w.end2);
      break;
    case WedgeType::Path:
      w.end1 = pick(g_->in_neighbors(v));
      w.end2 = pick(g_->out_neighbors(v));
      break;
    case WedgeType::In:
      pick_two(g_->in_neighbors(v), w.end1, w.end2);
      break;
    case WedgeType::RecipIn:
      w.end1 = pick(g_->rec_neighbors(v));
      w.end2 = pick(g_->in_neighbors(v));
      break;
    case WedgeType::RecipOut:
      w.end1 = pick(g_->rec_neighbors(v));
      w.end2 = pick(g_->out_neighbors(v));
      break;
    case WedgeType::RecipTot:
      pick_two(g_->rec_neighbors(v), w.end1, w.end2);
      break;
  }
  return w;
}

std::optional<TriangleType> is_closed(const Digraph& g, const Wedge& w) {
  const EdgeRelation r12 = g.connecting_edge(w.end1, w.end2);
  if (r12 == EdgeRelation::None) return std::nullopt;

  using E = EdgeRelation;
  E rc1 = E::None, rc2 = E::None;  // center -> end1, center -> end2
  switch (w.wtype) {
    case WedgeType::Out: rc1 = E::Forward, rc2 = E::Forward; break;
    case WedgeType::Path: rc1 = E::Backward, rc2 = E::Forward; break;
    case WedgeType::In: rc1 = E::Backward, rc2 = E::Backward; break;
    case WedgeType::RecipIn: rc1 = E::Reciprocal, rc2 = E::Backward; break;
    case WedgeType::RecipOut: rc1 = E::Reciprocal, rc2 = E::Forward; break;
    case WedgeType::RecipTot: rc1 = E::Reciprocal, rc2 = E::Reciprocal; break;
  }
  return classify_triangle_any(w.center, w.end1, w.end2, rc1, rc2, r12);
}

Count hoeffding_k(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("hoeffding_k: eps must be in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("hoeffding_k: delta must be in (0,1)");
  return static_cast<Count>(std::ceil(0.5 / (eps * eps) * std::log(2.0 / delta)));
}

double hoeffding_error(Count k, double delta) {
  if (k == 0) throw ArgumentError("hoeffding_error: k must be >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw ArgumentError("hoeffding_error: delta must be in (0,1)");
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(k)));
}

namespace {

constexpr Count kSampleBlock = 8192;

// Closure counts over k sampled psi-wedges. Blocks draw from seeds derived
// from (seed, psi, block) and merge by integer addition, so the result is
// independent of thread count and scheduling.
std::array<Count, kNumTriangleTypes> sample_closure_counts(const Digraph& g,
                                                           const WedgeSampler& sampler, Count k,
                                                           uint64_t seed, unsigned threads) {
  const uint64_t blocks = (k + kSampleBlock - 1) / kSampleBlock;
  threads = std::max(1u, threads);
  std::vector<std::array<Count, kNumTriangleTypes>> local(threads);
  for (auto& a : local) a.fill(0);

  parallel_blocks(blocks, threads, [&](uint64_t b, unsigned worker) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(sampler.wedge_type()), b));
    const Count lo = b * kSampleBlock;
    const Count hi = std::min(k, lo + kSampleBlock);
    auto& counts = local[worker];
    for (Count i = lo; i < hi; ++i) {
      const Wedge w = sampler.sample(rng);
      if (const auto tau = is_closed(g, w)) ++counts[static_cast<int>(*tau)];
    }
  });

  std::array<Count, kNumTriangleTypes> counts{};
  for (const auto& a : local)
    for (int t = 0; t < kNumTriangleTypes; ++t) counts[t] += a[t];
  return counts;
}

}  // namespace

std::vector<ClosureEstimate> estimate_closures(const Digraph& g, WedgeType psi, Count k,
                                               double delta, uint64_t seed, unsigned threads) {
  if (k == 0) throw ArgumentError("estimate_closures: k must be >= 1");
  const WedgeSampler sampler(g, psi);
  const auto counts = sample_closure_counts(g, sampler, k, seed, threads);
  const double eps = hoeffding_error(k, delta);

  std::vector<ClosureEstimate> out;
  Count closed_any = 0;
  for (TriangleType tau : kAllTriangleTypes) {
    closed_any += counts[static_cast<int>(tau)];
    if (chi(psi, tau) == 0) continue;
    const Count c = counts[static_cast<int>(tau)];
    out.push_back({psi, tau, k, c, static_cast<double>(c) / static_cast<double>(k), delta, eps});
  }
  out.push_back({psi, std::nullopt, k, closed_any,
                 static_cast<double>(closed_any) / static_cast<double>(k), delta, eps});
  return out;
}

TriangleEstimate estimate_triangles(const Digraph& g, TriangleType tau,
                                    std::optional<WedgeType> psi, Count k, double delta,
                                    uint64_t seed, unsigned threads) {
  if (k == 0) throw ArgumentError("estimate_triangles: k must be >= 1");
  const WedgeCounts wedges = total_wedge_counts(g);

  WedgeType chosen;
  if (psi) {
    if (chi(*psi, tau) == 0)
      throw ArgumentError(std::string("no ") + std::string(name(tau)) +
                          " triangle contains a wedge of type " + std::string(name(*psi)));
    chosen = *psi;
  } else {
    // Minimize |W_psi|/chi; compared as cross products to stay in integers.
    bool found = false;
    chosen = WedgeType::Out;
    for (WedgeType cand : kAllWedgeTypes) {
      const Count x = chi(cand, tau);
      if (x == 0) continue;
      if (!found || wedges[cand] * chi(chosen, tau) < wedges[chosen] * x) {
        chosen = cand;
        found = true;
      }
    }
  }

  TriangleEstimate est;
  est.tau = tau;
  est.psi_used = chosen;
  est.delta = delta;
  const Count w = wedges[chosen];
  if (w == 0) {
    est.exact_zero = true;  // chi >= 1: any such triangle would need one of these wedges
    return est;
  }
  const WedgeSampler sampler(g, chosen);
  const auto counts = sample_closure_counts(g, sampler, k, seed, threads);
  const double x = chi(chosen, tau);
  est.k = k;
  est.kappa_hat = static_cast<double>(counts[static_cast<int>(tau)]) / static_cast<double>(k);
  est.t_hat = est.kappa_hat * static_cast<double>(w) / x;
  est.abs_error_bound = hoeffding_error(k, delta) * static_cast<double>(w) / x;
  return est;
}

EstimatedCensus full_estimated_census(const Digraph& g, Count k, double delta, uint64_t seed,
                                      unsigned threads) {
  if (k == 0) throw ArgumentError("full_estimated_census: k must be >= 1");
  EstimatedCensus est;
  est.k = k;
  est.delta = delta;
  est.seed = seed;
  est.eps_bound = hoeffding_error(k, delta);
  est.wedges = total_wedge_counts(g);
  est.reciprocity = g.edge_count() ? g.reciprocity() : 0.0;

  // One shared sample per covering type that has wedges at all.
  std::array<std::array<Count, kNumTriangleTypes>, kNumWedgeTypes> counts{};
  std::array<bool, kNumWedgeTypes> sampled{};
  for (WedgeType psi : kCoveringWedgeTypes) {
    if (est.wedges[psi] == 0) continue;
    const WedgeSampler sampler(g, psi);
    counts[static_cast<int>(psi)] = sample_closure_counts(g, sampler, k, seed, threads);
    sampled[static_cast<int>(psi)] = true;
    est.sampled_types.push_back(psi);
  }

  for (TriangleType tau : kAllTriangleTypes) {
    const int t = static_cast<int>(tau);
    // Tightest bound: covering type minimizing |W_psi|/chi(psi,tau).
    WedgeType best = kCoveringWedgeTypes[0];
    bool found = false;
    for (WedgeType cand : kCoveringWedgeTypes) {
      const Count x = chi(cand, tau);
      if (x == 0) continue;
      if (!found || est.wedges[cand] * chi(best, tau) < est.wedges[best] * x) {
        best = cand;
        found = true;
      }
    }
    est.estimate_source[t] = best;
    const Count w = est.wedges[best];
    if (w == 0) {
      est.exact_zero[t] = true;
      continue;
    }
    const double x = chi(best, tau);
    const double kappa =
        static_cast<double>(counts[static_cast<int>(best)][t]) / static_cast<double>(k);
    est.triangle_estimates[t] = kappa * static_cast<double>(w) / x;
    est.triangle_bounds[t] = est.eps_bound * static_cast<double>(w) / x;
  }

  for (int t = 0; t < kNumTriangleTypes; ++t) {
    est.total_triangles += est.triangle_estimates[t];
    est.total_bound += est.triangle_bounds[t];
  }
  est.transitivity = est.wedges.total
                         ? 3.0 * est.total_triangles / static_cast<double>(est.wedges.total)
                         : 0.0;

  for (int p = 0; p < kNumWedgeTypes; ++p) {
    const WedgeType psi = static_cast<WedgeType>(p);
    const Count w = est.wedges.by_type[p];
    est.empty_wedge_class[p] = w == 0;
    est.wedge_percentages[p] =
        est.wedges.total ? 100.0 * static_cast<double>(w) / static_cast<double>(est.wedges.total)
                         : 0.0;
    for (int t = 0; t < kNumTriangleTypes; ++t) {
      const int x = chi(psi, static_cast<TriangleType>(t));
      if (x == 0 || w == 0) continue;
      est.closures[p][t] =
          sampled[p] ? static_cast<double>(counts[p][t]) / static_cast<double>(k)
                     : static_cast<double>(x) * est.triangle_estimates[t] / static_cast<double>(w);
    }
  }
  for (int t = 0; t < kNumTriangleTypes; ++t)
    est.triangle_percentages[t] =
        est.total_triangles > 0 ? 100.0 * est.triangle_estimates[t] / est.total_triangles : 0.0;
  return est;
}

}  // namespace triadic
