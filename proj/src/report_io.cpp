#include "triadic/report_io.hpp"

#include <charconv>

namespace triadic {

namespace {

std::string fmt(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

template <typename T>
Json wedge_map(const std::array<T, kNumWedgeTypes>& values) {
  Json j = Json::object();
  for (WedgeType psi : kAllWedgeTypes) j[std::string(name(psi))] = values[static_cast<int>(psi)];
  return j;
}

template <typename T>
Json triangle_map(const std::array<T, kNumTriangleTypes>& values) {
  Json j = Json::object();
  for (TriangleType tau : kAllTriangleTypes)
    j[std::string(name(tau))] = values[static_cast<int>(tau)];
  return j;
}

// 15 keys "psi:tau" in canonical pair order.
Json closure_map(const std::array<std::array<double, kNumTriangleTypes>, kNumWedgeTypes>& c) {
  Json j = Json::object();
  for (const auto& [psi, tau] : kClosurePairs)
    j[std::string(name(psi)) + ":" + std::string(name(tau))] =
        c[static_cast<int>(psi)][static_cast<int>(tau)];
  return j;
}

Json name_list(const std::array<bool, kNumWedgeTypes>& flags) {
  Json j = Json::array();
  for (WedgeType psi : kAllWedgeTypes)
    if (flags[static_cast<int>(psi)]) j.push_back(std::string(name(psi)));
  return j;
}

}  // namespace

Json graph_json(const Digraph& g) {
  Json j = Json::object();
  j["vertices"] = g.vertex_count();
  j["basic_edges"] = g.basic_edges();
  j["reciprocal_edges"] = g.reciprocal_edges();
  j["edges"] = g.edge_count();  // a reciprocal edge counts once
  j["reciprocity"] = g.edge_count() ? g.reciprocity() : 0.0;
  j["self_loops_dropped"] = g.ingest_stats().self_loops_dropped;
  j["duplicate_pairs_dropped"] = g.ingest_stats().duplicate_pairs_dropped;
  return j;
}

Json report_json(const CensusReport& rep, const Digraph& g) {
  Json j = Json::object();
  j["schema_version"] = 1;
  j["kind"] = "census";
  j["graph"] = graph_json(g);
  Json wc = wedge_map(rep.wedges.by_type);
  wc["total"] = rep.wedges.total;
  j["wedge_counts"] = std::move(wc);
  j["wedge_percentages"] = wedge_map(rep.wedge_percentages);
  Json tc = triangle_map(rep.triangles.by_type);
  tc["total"] = rep.triangles.total;
  j["triangle_counts"] = std::move(tc);
  j["triangle_percentages"] = triangle_map(rep.triangle_percentages);
  j["transitivity"] = rep.transitivity;
  j["closures"] = closure_map(rep.closures);
  j["empty_wedge_classes"] = name_list(rep.empty_wedge_class);
  return j;
}

Json report_json(const EstimatedCensus& est, const Digraph& g) {
  Json j = Json::object();
  j["schema_version"] = 1;
  j["kind"] = "estimate";
  j["graph"] = graph_json(g);
  Json meta = Json::object();
  meta["samples_per_type"] = est.k;
  meta["delta"] = est.delta;
  meta["eps_bound"] = est.eps_bound;
  meta["seed"] = est.seed;
  Json st = Json::array();
  for (WedgeType psi : est.sampled_types) st.push_back(std::string(name(psi)));
  meta["sampled_types"] = std::move(st);
  j["estimate"] = std::move(meta);
  Json wc = wedge_map(est.wedges.by_type);
  wc["total"] = est.wedges.total;
  j["wedge_counts"] = std::move(wc);
  j["wedge_percentages"] = wedge_map(est.wedge_percentages);
  Json te = triangle_map(est.triangle_estimates);
  te["total"] = est.total_triangles;
  j["triangle_estimates"] = std::move(te);
  Json tb = triangle_map(est.triangle_bounds);
  tb["total"] = est.total_bound;
  j["triangle_error_bounds"] = std::move(tb);
  Json src = Json::object();
  for (TriangleType tau : kAllTriangleTypes)
    src[std::string(name(tau))] = std::string(name(est.estimate_source[static_cast<int>(tau)]));
  j["triangle_sources"] = std::move(src);
  Json ez = Json::array();
  for (TriangleType tau : kAllTriangleTypes)
    if (est.exact_zero[static_cast<int>(tau)]) ez.push_back(std::string(name(tau)));
  j["triangle_exact_zero"] = std::move(ez);
  j["triangle_percentages"] = triangle_map(est.triangle_percentages);
  j["transitivity"] = est.transitivity;
  j["closures"] = closure_map(est.closures);
  j["empty_wedge_classes"] = name_list(est.empty_wedge_class);
  return j;
}

Json deviation_json(const DeviationReport& rep) {
  Json j = Json::object();
  j["reciprocity"] = rep.reciprocity;
  Json tc = triangle_map(rep.observed.by_type);
  tc["total"] = rep.observed.total;
  j["triangle_counts"] = std::move(tc);
  j["observed_fractions"] = triangle_map(rep.observed_fraction);
  j["predicted_fractions"] = triangle_map(rep.predicted);
  j["ratios"] = triangle_map(rep.ratio);
  return j;
}

namespace {

template <typename Report>
ChartData chart_from(const Report& rep, bool estimated) {
  ChartData c;
  c.estimated = estimated;
  c.transitivity = rep.transitivity;
  c.wedge_pct = rep.wedge_percentages;
  c.triangle_pct = rep.triangle_percentages;
  c.segments = rep.closures;
  for (int p = 0; p < kNumWedgeTypes; ++p)
    for (int t = 0; t < kNumTriangleTypes; ++t) c.stack_total[p] += c.segments[p][t];
  return c;
}

}  // namespace

ChartData make_chart_data(const CensusReport& rep) { return chart_from(rep, false); }
ChartData make_chart_data(const EstimatedCensus& est) { return chart_from(est, true); }

Json chart_json(const ChartData& chart) {
  Json j = Json::object();
  j["schema_version"] = 1;
  j["kind"] = "chart";
  j["estimated"] = chart.estimated;
  j["transitivity"] = chart.transitivity;
  Json bars = Json::object();
  for (WedgeType psi : kAllWedgeTypes) {
    const int p = static_cast<int>(psi);
    Json bar = Json::object();
    bar["wedge_pct"] = chart.wedge_pct[p];
    Json segs = Json::object();
    for (TriangleType tau : kAllTriangleTypes)
      if (chi(psi, tau) != 0)
        segs[std::string(name(tau))] = chart.segments[p][static_cast<int>(tau)];
    bar["segments"] = std::move(segs);
    bar["stack_total"] = chart.stack_total[p];
    bars[std::string(name(psi))] = std::move(bar);
  }
  j["wedge_bars"] = std::move(bars);
  j["triangle_percentages"] = triangle_map(chart.triangle_pct);
  return j;
}

namespace {

constexpr char kPairHeader[] = "wedge_type,triangle_type,chi,wedge_count";

}  // namespace

std::string report_csv(const CensusReport& rep) {
  std::string s = std::string(kPairHeader) + ",triangle_count,closure\n";
  for (const auto& [psi, tau] : kClosurePairs) {
    s += std::string(name(psi)) + "," + std::string(name(tau)) + "," +
         std::to_string(chi(psi, tau)) + "," + std::to_string(rep.wedges[psi]) + "," +
         std::to_string(rep.triangles[tau]) + "," + fmt(rep.closure(psi, tau)) + "\n";
  }
  return s;
}

std::string report_csv(const EstimatedCensus& est) {
  std::string s =
      std::string(kPairHeader) + ",triangle_estimate,triangle_bound,closure,source_wedge_type\n";
  for (const auto& [psi, tau] : kClosurePairs) {
    const int t = static_cast<int>(tau);
    s += std::string(name(psi)) + "," + std::string(name(tau)) + "," +
         std::to_string(chi(psi, tau)) + "," + std::to_string(est.wedges[psi]) + "," +
         fmt(est.triangle_estimates[t]) + "," + fmt(est.triangle_bounds[t]) + "," +
         fmt(est.closure(psi, tau)) + "," + std::string(name(est.estimate_source[t])) + "\n";
  }
  return s;
}

std::string chart_csv(const ChartData& chart) {
  std::string s =
      "record,name,wedge_pct,seg_trans,seg_loop,seg_out_recip,seg_path_recip,seg_in_recip,"
      "seg_two_recip,seg_three_recip,stack_total\n";
  for (WedgeType psi : kAllWedgeTypes) {
    const int p = static_cast<int>(psi);
    s += "bar," + std::string(name(psi)) + "," + fmt(chart.wedge_pct[p]);
    for (int t = 0; t < kNumTriangleTypes; ++t) s += "," + fmt(chart.segments[p][t]);
    s += "," + fmt(chart.stack_total[p]) + "\n";
  }
  for (TriangleType tau : kAllTriangleTypes) {
    s += "triangle," + std::string(name(tau)) + "," +
         fmt(chart.triangle_pct[static_cast<int>(tau)]) + ",,,,,,,,\n";
  }
  s += "transitivity,," + fmt(chart.transitivity) + ",,,,,,,,\n";
  return s;
}

}  // namespace triadic
