#pragma once

#include <string>

#include "json.hpp"
#include "triadic/census.hpp"
#include "triadic/null_model.hpp"
#include "triadic/sampling.hpp"

namespace triadic {

using Json = nlohmann::ordered_json;

// Plot-ready stacked-bar data: one bar per wedge type whose height is the
// total closed fraction, split into per-triangle-type segments, plus the
// share labels and the global transitivity line.
struct ChartData {
  bool estimated = false;
  double transitivity = 0;
  std::array<double, kNumWedgeTypes> wedge_pct{};
  std::array<std::array<double, kNumTriangleTypes>, kNumWedgeTypes> segments{};
  std::array<double, kNumWedgeTypes> stack_total{};  // sum of segments, <= 1
  std::array<double, kNumTriangleTypes> triangle_pct{};
};

ChartData make_chart_data(const CensusReport& rep);
ChartData make_chart_data(const EstimatedCensus& est);

// All JSON documents carry schema_version and a kind tag; field layouts are
// documented in the README. Serialization is deterministic: no timestamps,
// fixed key order, shortest round-trip number formatting.
Json graph_json(const Digraph& g);
Json report_json(const CensusReport& rep, const Digraph& g);
Json report_json(const EstimatedCensus& est, const Digraph& g);
Json deviation_json(const DeviationReport& rep);
Json chart_json(const ChartData& chart);

// CSV, one row per (psi, tau) pair with nonzero chi.
std::string report_csv(const CensusReport& rep);
std::string report_csv(const EstimatedCensus& est);
// CSV with record-typed rows: bar, triangle, transitivity.
std::string chart_csv(const ChartData& chart);

}  // namespace triadic
