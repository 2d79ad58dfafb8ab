#include "triadic/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/stats.hpp"
#include "triadic/census.hpp"

using namespace triadic;
using testsupport::enumerate_wedges;
using testsupport::wedge_key;

namespace {

EdgeRelation rel(const Digraph& g, Vertex a, Vertex b) { return g.connecting_edge(a, b); }

// Confirms the sampled wedge honors the documented role layout for its type.
void check_roles(const Digraph& g, const Wedge& w, WedgeType psi) {
  CHECK(w.wtype == psi);
  CHECK(w.end1 != w.end2);
  CHECK(w.end1 != w.center);
  CHECK(w.end2 != w.center);
  switch (psi) {
    case WedgeType::Out:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Forward);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Forward);
      break;
    case WedgeType::Path:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Backward);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Forward);
      break;
    case WedgeType::In:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Backward);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Backward);
      break;
    case WedgeType::RecipIn:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Reciprocal);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Backward);
      break;
    case WedgeType::RecipOut:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Reciprocal);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Forward);
      break;
    case WedgeType::RecipTot:
      CHECK(rel(g, w.center, w.end1) == EdgeRelation::Reciprocal);
      CHECK(rel(g, w.center, w.end2) == EdgeRelation::Reciprocal);
      break;
  }
}

}  // namespace

TEST_CASE("sampler totals match the wedge census") {
  const auto g = testsupport::random_digraph(40, 0.2, 0.4, 3);
  const auto w = total_wedge_counts(g);
  for (WedgeType psi : kAllWedgeTypes) {
    if (w[psi] == 0) {
      CHECK_THROWS_AS(WedgeSampler(g, psi), UndefinedValueError);
    } else {
      CHECK(WedgeSampler(g, psi).total() == w[psi]);
    }
  }
  CHECK_THROWS_AS(WedgeSampler(Digraph::from_edges(3, {}), WedgeType::Path),
                  UndefinedValueError);
}

TEST_CASE("a one-wedge class always returns that wedge") {
  const auto g = Digraph::from_edges(3, {{0, 1}, {1, 2}});
  WedgeSampler s(g, WedgeType::Path);
  REQUIRE(s.total() == 1);
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto w = s.sample(rng);
    CHECK(w.center == 1);
    CHECK(w.end1 == 0);
    CHECK(w.end2 == 2);
  }
}

TEST_CASE("centers are drawn proportionally to their wedge mass") {
  // Vertex 0 holds 3 of the 4 in-wedges, vertex 4 the remaining one.
  const auto g =
      Digraph::from_edges(7, {{1, 0}, {2, 0}, {3, 0}, {5, 4}, {6, 4}});
  WedgeSampler s(g, WedgeType::In);
  REQUIRE(s.total() == 4);
  Rng rng(2024);
  const int k = 100000;
  int at_heavy = 0;
  for (int i = 0; i < k; ++i) at_heavy += s.sample(rng).center == 0;
  const double freq = static_cast<double>(at_heavy) / k;
  CHECK(std::abs(freq - 0.75) < 3.0 * std::sqrt(0.75 * 0.25 / k));
}

TEST_CASE("samples are valid wedges, uniform over each class") {
  const auto g = testsupport::random_digraph(20, 0.3, 0.4, 17);
  const auto wc = total_wedge_counts(g);
  Rng rng(555);
  for (WedgeType psi : kAllWedgeTypes) {
    if (wc[psi] == 0) continue;
    const auto universe = enumerate_wedges(g, psi);
    REQUIRE(universe.size() == wc[psi]);
    std::map<testsupport::WedgeKey, int> hits;
    const int k = 60000;
    WedgeSampler s(g, psi);
    for (int i = 0; i < k; ++i) {
      const auto w = s.sample(rng);
      check_roles(g, w, psi);
      const auto key = wedge_key(w.wtype, w.center, w.end1, w.end2);
      CHECK(std::binary_search(universe.begin(), universe.end(), key));
      ++hits[key];
    }
    if (universe.size() < 2) continue;
    const double expect = static_cast<double>(k) / static_cast<double>(universe.size());
    double stat = 0;
    for (const auto& key : universe) {
      const double diff = hits[key] - expect;
      stat += diff * diff / expect;
    }
    const double p = testsupport::chi_square_pvalue(
        stat, static_cast<double>(universe.size() - 1));
    CHECK(p > 1e-4);
  }
}

TEST_CASE("is_closed finds the closing relation and classifies it") {
  const auto open = Digraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_closed(open, Wedge{1, 0, 2, WedgeType::Path}).has_value());

  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto t = is_closed(trans, Wedge{1, 0, 2, WedgeType::Path});
  REQUIRE(t.has_value());
  CHECK(*t == TriangleType::Trans);

  // Two-way pair 0/1 plus both aiming at 2: the reciprocal wedge at 0 closes
  // into a triangle whose reciprocal pair feeds a common head.
  const auto in_recip = Digraph::from_edges(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  const auto a = is_closed(in_recip, Wedge{0, 1, 2, WedgeType::RecipOut});
  REQUIRE(a.has_value());
  CHECK(*a == TriangleType::InRecip);

  const auto out_recip = Digraph::from_edges(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}});
  const auto b = is_closed(out_recip, Wedge{0, 1, 2, WedgeType::RecipIn});
  REQUIRE(b.has_value());
  CHECK(*b == TriangleType::OutRecip);
}

TEST_CASE("sample size and error bound follow the concentration formulas") {
  CHECK(hoeffding_error(5000, 0.001) == doctest::Approx(0.027570).epsilon(1e-4));
  CHECK(hoeffding_error(10000, 0.001) == doctest::Approx(0.019495).epsilon(1e-4));
  CHECK(hoeffding_error(20000, 0.001) == doctest::Approx(0.013785).epsilon(1e-4));
  CHECK(hoeffding_error(10000, 0.001) ==
        std::sqrt(std::log(2.0 / 0.001) / (2.0 * 10000)));

  for (double eps : {0.05, 0.02, 0.01, 0.005}) {
    for (double delta : {0.1, 0.01, 0.001}) {
      const Count k = hoeffding_k(eps, delta);
      CHECK(hoeffding_error(k, delta) <= eps);
      if (k > 1) CHECK(hoeffding_error(k - 1, delta) > eps);
    }
  }

  CHECK_THROWS_AS(hoeffding_k(0.0, 0.5), ArgumentError);
  CHECK_THROWS_AS(hoeffding_k(1.5, 0.5), ArgumentError);
  CHECK_THROWS_AS(hoeffding_k(0.1, 0.0), ArgumentError);
  CHECK_THROWS_AS(hoeffding_k(0.1, 1.0), ArgumentError);
  CHECK_THROWS_AS(hoeffding_error(0, 0.5), ArgumentError);
}

TEST_CASE("closure estimation is exact on forced classes") {
  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto est = estimate_closures(trans, WedgeType::Path, 50, 0.01, 7);
  REQUIRE(!est.empty());
  double total = -1;
  for (const auto& e : est) {
    CHECK(e.psi == WedgeType::Path);
    CHECK(e.k == 50);
    if (!e.tau.has_value()) {
      total = e.kappa_hat;
    } else if (*e.tau == TriangleType::Trans) {
      CHECK(e.kappa_hat == 1.0);
    } else {
      CHECK(e.kappa_hat == 0.0);
    }
  }
  CHECK(total == 1.0);

  // Reciprocal in-wedges of the hinge graph never close.
  const auto hinge =
      Digraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 2}});
  for (const auto& e : estimate_closures(hinge, WedgeType::RecipIn, 80, 0.01, 3))
    CHECK(e.kappa_hat == 0.0);
}

TEST_CASE("closure estimates enumerate one entry per compatible triangle type") {
  const auto g = testsupport::random_digraph(30, 0.2, 0.4, 23);
  for (WedgeType psi : kAllWedgeTypes) {
    int compatible = 0;
    for (TriangleType tau : kAllTriangleTypes) compatible += chi(psi, tau) > 0;
    if (total_wedge_counts(g)[psi] == 0) continue;
    const auto est = estimate_closures(g, psi, 100, 0.05, 1);
    CHECK(est.size() == static_cast<size_t>(compatible) + 1);
    CHECK(!est.back().tau.has_value());
    double sum = 0;
    for (const auto& e : est)
      if (e.tau.has_value()) sum += e.kappa_hat;
    CHECK(est.back().kappa_hat == doctest::Approx(sum));
  }
  CHECK_THROWS_AS(estimate_closures(g, WedgeType::Path, 0, 0.05, 1), ArgumentError);
  CHECK_THROWS_AS(estimate_closures(g, WedgeType::Path, 100, 2.0, 1), ArgumentError);
}

TEST_CASE("closure estimation is deterministic for a seed, any thread count") {
  const auto g = testsupport::random_digraph(80, 0.1, 0.35, 29);
  const auto one = estimate_closures(g, WedgeType::Path, 5000, 0.01, 31, 1);
  const auto two = estimate_closures(g, WedgeType::Path, 5000, 0.01, 31, 2);
  const auto four = estimate_closures(g, WedgeType::Path, 5000, 0.01, 31, 4);
  const auto rerun = estimate_closures(g, WedgeType::Path, 5000, 0.01, 31, 1);
  REQUIRE(one.size() == two.size());
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].kappa_hat == two[i].kappa_hat);
    CHECK(one[i].kappa_hat == four[i].kappa_hat);
    CHECK(one[i].kappa_hat == rerun[i].kappa_hat);
  }
}

TEST_CASE("closure estimates are unbiased across independent seeds") {
  const auto g = testsupport::random_digraph(60, 0.15, 0.3, 71);
  const auto w = total_wedge_counts(g);
  const auto t = enumerate_triangle_census(g);
  REQUIRE(w[WedgeType::Path] > 0);
  const double exact = static_cast<double>(chi(WedgeType::Path, TriangleType::Trans)) *
                       static_cast<double>(t[TriangleType::Trans]) /
                       static_cast<double>(w[WedgeType::Path]);
  const int reps = 200, k = 1000;
  std::vector<double> vals;
  for (int i = 0; i < reps; ++i) {
    const auto est = estimate_closures(g, WedgeType::Path, k, 0.05, 1000 + i);
    for (const auto& e : est)
      if (e.tau.has_value() && *e.tau == TriangleType::Trans) vals.push_back(e.kappa_hat);
  }
  REQUIRE(vals.size() == reps);
  double mean = 0;
  for (double v : vals) mean += v;
  mean /= reps;
  double var = 0;
  for (double v : vals) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (reps - 1));
  CHECK(std::abs(mean - exact) <= 4.0 * sd / std::sqrt(static_cast<double>(reps)) + 1e-12);
}

TEST_CASE("the concentration bound holds at its stated confidence") {
  const auto g = testsupport::random_digraph(60, 0.15, 0.3, 83);
  const auto w = total_wedge_counts(g);
  const auto t = enumerate_triangle_census(g);
  const double exact = static_cast<double>(chi(WedgeType::Path, TriangleType::Trans)) *
                       static_cast<double>(t[TriangleType::Trans]) /
                       static_cast<double>(w[WedgeType::Path]);
  const int trials = 300, k = 500;
  const double delta = 0.05;
  const double eps = hoeffding_error(k, delta);
  int misses = 0;
  for (int i = 0; i < trials; ++i) {
    const auto est = estimate_closures(g, WedgeType::Path, k, delta, 5000 + i);
    for (const auto& e : est)
      if (e.tau.has_value() && *e.tau == TriangleType::Trans)
        misses += std::abs(e.kappa_hat - exact) > eps;
  }
  // Expected misses is at most 15; allow three binomial deviations above.
  CHECK(misses <= 27);
}

TEST_CASE("triangle estimation from a forced wedge class") {
  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto est =
      estimate_triangles(trans, TriangleType::Trans, WedgeType::Out, 10, 0.01, 5);
  CHECK(est.tau == TriangleType::Trans);
  CHECK(est.psi_used == WedgeType::Out);
  CHECK(est.k == 10);
  CHECK(est.kappa_hat == 1.0);
  CHECK(est.t_hat == 1.0);
  CHECK(est.abs_error_bound == doctest::Approx(hoeffding_error(10, 0.01)));
  CHECK_FALSE(est.exact_zero);
}

TEST_CASE("automatic wedge class selection minimizes the scaled bound") {
  const auto cyc = Digraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto est = estimate_triangles(cyc, TriangleType::Loop, std::nullopt, 30, 0.01, 1);
  CHECK(est.psi_used == WedgeType::Path);
  CHECK(est.t_hat == 1.0);

  // RecipTot is three times as efficient per wedge for fully reciprocal triangles.
  std::vector<std::pair<Vertex, Vertex>> k4;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) k4.emplace_back(u, v);
  const auto full = Digraph::from_edges(4, k4);
  const auto est3 =
      estimate_triangles(full, TriangleType::ThreeRecip, std::nullopt, 50, 0.01, 1);
  CHECK(est3.psi_used == WedgeType::RecipTot);
  CHECK(est3.t_hat == 4.0);
}

TEST_CASE("incompatible wedge class choices are rejected") {
  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(
      estimate_triangles(trans, TriangleType::ThreeRecip, WedgeType::Out, 10, 0.01, 1),
      ArgumentError);
  CHECK_THROWS_AS(
      estimate_triangles(trans, TriangleType::Trans, WedgeType::Out, 0, 0.01, 1),
      ArgumentError);
}

TEST_CASE("an empty compatible wedge class certifies a zero count") {
  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto est =
      estimate_triangles(trans, TriangleType::ThreeRecip, std::nullopt, 25, 0.01, 1);
  CHECK(est.exact_zero);
  CHECK(est.t_hat == 0.0);
  CHECK(est.abs_error_bound == 0.0);
}

TEST_CASE("triangle estimates respect their error bounds on a sizable graph") {
  const auto g = testsupport::random_digraph(300, 0.05, 0.3, 97);
  const auto exact = enumerate_triangle_census(g);
  const double delta = 0.001;
  for (TriangleType tau : kAllTriangleTypes) {
    const auto est = estimate_triangles(g, tau, std::nullopt, 20000, delta, 11);
    CHECK(std::abs(est.t_hat - static_cast<double>(exact[tau])) <=
          est.abs_error_bound + 1e-9);
  }
}

TEST_CASE("the full estimated census matches exact results on forced graphs") {
  const auto trans = Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto est = full_estimated_census(trans, 40, 0.01, 13);
  CHECK(est.wedges[WedgeType::Out] == 1);
  CHECK(est.wedges.total == 3);
  CHECK(est.triangle_estimates[static_cast<int>(TriangleType::Trans)] == 1.0);
  for (TriangleType tau : kAllTriangleTypes)
    if (tau != TriangleType::Trans)
      CHECK(est.triangle_estimates[static_cast<int>(tau)] == 0.0);
  CHECK(est.transitivity == 1.0);
  CHECK(est.exact_zero[static_cast<int>(TriangleType::ThreeRecip)]);
  CHECK(est.sampled_types == std::vector<WedgeType>{WedgeType::Path});
  CHECK(est.closures[static_cast<int>(WedgeType::Out)][static_cast<int>(TriangleType::Trans)] ==
        1.0);
}

TEST_CASE("the full estimated census tracks enumeration within its bounds") {
  const auto g = testsupport::random_digraph(400, 0.03, 0.35, 41);
  const auto exact = enumerate_triangle_census(g);
  const auto w = total_wedge_counts(g);
  const auto est = full_estimated_census(g, 20000, 0.001, 4);
  double bound_sum = 0;
  for (int i = 0; i < kNumTriangleTypes; ++i) {
    CHECK(std::abs(est.triangle_estimates[i] - static_cast<double>(exact.by_type[i])) <=
          est.triangle_bounds[i] + 1e-9);
    bound_sum += est.triangle_bounds[i];
  }
  const double exact_trans =
      3.0 * static_cast<double>(exact.total) / static_cast<double>(w.total);
  CHECK(std::abs(est.transitivity - exact_trans) <=
        3.0 * bound_sum / static_cast<double>(w.total) + 1e-12);
}

TEST_CASE("the full estimated census is deterministic across thread counts") {
  const auto g = testsupport::random_digraph(150, 0.08, 0.4, 59);
  const auto a = full_estimated_census(g, 4000, 0.01, 17, 1);
  const auto b = full_estimated_census(g, 4000, 0.01, 17, 3);
  for (int i = 0; i < kNumTriangleTypes; ++i) {
    CHECK(a.triangle_estimates[i] == b.triangle_estimates[i]);
    CHECK(a.triangle_bounds[i] == b.triangle_bounds[i]);
  }
  for (int p = 0; p < kNumWedgeTypes; ++p)
    for (int t = 0; t < kNumTriangleTypes; ++t) CHECK(a.closures[p][t] == b.closures[p][t]);
}
