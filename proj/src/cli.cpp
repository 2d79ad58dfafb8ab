#include "triadic/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "triadic/edge_list.hpp"
#include "triadic/parallel.hpp"
#include "triadic/report_io.hpp"
#include "triadic/rng.hpp"

namespace triadic::cli {

namespace {

struct CommonOpts {
  std::string input;
  std::string output;  // empty or "-": stdout
  std::string csv;     // empty: no CSV written
  int threads = 0;     // 0: TRIADIC_THREADS, then all cores
};

void add_common(CLI::App* sub, CommonOpts& o, bool has_csv = true) {
  sub->add_option("-i,--input", o.input, "edge-list file (SNAP text format)")->required();
  sub->add_option("-o,--output", o.output, "JSON output path (default: stdout)");
  if (has_csv) sub->add_option("--csv", o.csv, "also write a CSV report to this path");
  sub->add_option("--threads", o.threads, "worker threads (default: TRIADIC_THREADS, then all cores)");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open output file: " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("write failure: " + path);
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  write_text(path, j.dump(2) + "\n", out);
}

ChartData mean_chart(const std::vector<ChartData>& charts) {
  ChartData mean;
  mean.estimated = false;
  const double n = static_cast<double>(charts.size());
  for (const ChartData& c : charts) {
    mean.transitivity += c.transitivity / n;
    for (int p = 0; p < kNumWedgeTypes; ++p) {
      mean.wedge_pct[p] += c.wedge_pct[p] / n;
      mean.stack_total[p] += c.stack_total[p] / n;
      for (int t = 0; t < kNumTriangleTypes; ++t) mean.segments[p][t] += c.segments[p][t] / n;
    }
    for (int t = 0; t < kNumTriangleTypes; ++t) mean.triangle_pct[t] += c.triangle_pct[t] / n;
  }
  return mean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed triadic census, closure, and null-model analysis"};
  app.name("triadic");
  app.require_subcommand(1);

  CommonOpts census_o, estimate_o, chart_o, null_o, groups_o, bench_o;
  uint64_t estimate_samples = 0, chart_samples = 20000, bench_samples = 0;
  double estimate_delta = 0, chart_delta = 0.001, bench_delta = 0.001;
  uint64_t estimate_seed = 0, chart_seed = 0, null_seed = 0, bench_seed = 0;
  uint64_t null_repeats = 1;
  bool chart_estimated = false;

  CLI::App* census = app.add_subcommand("census", "exact wedge/triangle census and closures");
  add_common(census, census_o);

  CLI::App* estimate =
      app.add_subcommand("estimate", "sampled census with per-type error bounds");
  add_common(estimate, estimate_o);
  estimate->add_option("-k,--samples", estimate_samples, "wedge samples per type")->required();
  estimate->add_option("--delta", estimate_delta, "confidence parameter in (0,1)")->required();
  estimate->add_option("--seed", estimate_seed, "random seed (default 0)");

  CLI::App* chart = app.add_subcommand("chart", "stacked closure-chart data");
  add_common(chart, chart_o);
  chart->add_flag("--estimated", chart_estimated, "use the sampling estimator");
  chart->add_option("-k,--samples", chart_samples, "wedge samples per type (with --estimated)");
  chart->add_option("--delta", chart_delta, "confidence parameter (with --estimated)");
  chart->add_option("--seed", chart_seed, "random seed (with --estimated)");

  CLI::App* null_cmd =
      app.add_subcommand("null", "deviation from the random-direction null model");
  add_common(null_cmd, null_o);
  null_cmd->add_option("--seed", null_seed, "random seed for direction reassignment");
  null_cmd->add_option("--repeats", null_repeats, "randomized copies to average")
      ->check(CLI::PositiveNumber);

  CLI::App* groups =
      app.add_subcommand("groups", "reciprocity-grouped closure and cyclic breakdown");
  add_common(groups, groups_o, false);

  CLI::App* bench = app.add_subcommand("bench", "estimation vs enumeration wall-clock");
  add_common(bench, bench_o, false);
  bench->add_option("-k,--samples", bench_samples, "wedge samples per type")->required();
  bench->add_option("--delta", bench_delta, "confidence parameter (default 0.001)");
  bench->add_option("--seed", bench_seed, "random seed (default 0)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("triadic");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (census->parsed()) {
      const Digraph g = load_digraph(census_o.input);
      const CensusReport rep = closures(g, resolve_threads(census_o.threads));
      emit(report_json(rep, g), census_o.output, out);
      if (!census_o.csv.empty()) write_text(census_o.csv, report_csv(rep), out);
    } else if (estimate->parsed()) {
      const Digraph g = load_digraph(estimate_o.input);
      const EstimatedCensus est = full_estimated_census(
          g, estimate_samples, estimate_delta, estimate_seed, resolve_threads(estimate_o.threads));
      emit(report_json(est, g), estimate_o.output, out);
      if (!estimate_o.csv.empty()) write_text(estimate_o.csv, report_csv(est), out);
    } else if (chart->parsed()) {
      const Digraph g = load_digraph(chart_o.input);
      const unsigned threads = resolve_threads(chart_o.threads);
      const ChartData data =
          chart_estimated
              ? make_chart_data(
                    full_estimated_census(g, chart_samples, chart_delta, chart_seed, threads))
              : make_chart_data(closures(g, threads));
      emit(chart_json(data), chart_o.output, out);
      if (!chart_o.csv.empty()) write_text(chart_o.csv, chart_csv(data), out);
    } else if (null_cmd->parsed()) {
      const Digraph g = load_digraph(null_o.input);
      const unsigned threads = resolve_threads(null_o.threads);
      const DeviationReport dev = deviation_report(g, threads);
      const auto pairs = undirect(g);
      const double r = g.reciprocity();

      Json j = Json::object();
      j["schema_version"] = 1;
      j["kind"] = "null";
      j["graph"] = graph_json(g);
      j["deviation"] = deviation_json(dev);

      std::vector<ChartData> charts;
      Json per_repeat = Json::array();
      for (uint64_t i = 0; i < null_repeats; ++i) {
        const uint64_t rep_seed = derive_seed(null_seed, i);
        const Digraph rnd = randomize_directions(g.vertex_count(), pairs, r, rep_seed, threads);
        const CensusReport rep = closures(rnd, threads);
        charts.push_back(make_chart_data(rep));
        Json one = Json::object();
        one["seed"] = rep_seed;
        Json tc = Json::object();
        for (TriangleType tau : kAllTriangleTypes)
          tc[std::string(name(tau))] = rep.triangles[tau];
        tc["total"] = rep.triangles.total;
        one["triangle_counts"] = std::move(tc);
        one["transitivity"] = rep.transitivity;
        per_repeat.push_back(std::move(one));
      }
      const ChartData mean = mean_chart(charts);
      Json rnd_block = Json::object();
      rnd_block["seed"] = null_seed;
      rnd_block["repeats"] = null_repeats;
      rnd_block["mean_chart"] = chart_json(mean);
      rnd_block["per_repeat"] = std::move(per_repeat);
      j["randomized"] = std::move(rnd_block);
      emit(j, null_o.output, out);
      if (!null_o.csv.empty()) write_text(null_o.csv, chart_csv(mean), out);
    } else if (groups->parsed()) {
      const Digraph g = load_digraph(groups_o.input);
      const WedgeCounts wc = total_wedge_counts(g);
      const TriangleCounts tc = enumerate_triangle_census(g, resolve_threads(groups_o.threads));
      Json j = Json::object();
      j["schema_version"] = 1;
      j["kind"] = "groups";
      j["graph"] = graph_json(g);
      Json gc = Json::object();
      gc["zero_recip"] = recip_group_closure(wc, tc, 0);
      gc["one_recip"] = recip_group_closure(wc, tc, 1);
      gc["two_recip"] = recip_group_closure(wc, tc, 2);
      j["group_closures"] = std::move(gc);
      const auto cyc = cyclic_breakdown(tc);
      Json cb = Json::object();
      for (size_t i = 0; i < kCyclicTypes.size(); ++i)
        cb[std::string(name(kCyclicTypes[i]))] = cyc[i];
      j["cyclic_breakdown"] = std::move(cb);
      emit(j, groups_o.output, out);
    } else if (bench->parsed()) {
      const Digraph g = load_digraph(bench_o.input);
      const unsigned threads = resolve_threads(bench_o.threads);
      using clock = std::chrono::steady_clock;

      const auto t0 = clock::now();
      const TriangleCounts exact = enumerate_triangle_census(g, threads);
      const auto t1 = clock::now();
      const EstimatedCensus est =
          full_estimated_census(g, bench_samples, bench_delta, bench_seed, threads);
      const auto t2 = clock::now();

      const double enum_s = std::chrono::duration<double>(t1 - t0).count();
      const double est_s = std::chrono::duration<double>(t2 - t1).count();
      bool within = true;
      for (int t = 0; t < kNumTriangleTypes; ++t)
        within = within && std::abs(est.triangle_estimates[t] -
                                    static_cast<double>(exact.by_type[t])) <=
                               est.triangle_bounds[t];

      Json j = Json::object();
      j["schema_version"] = 1;
      j["kind"] = "bench";
      j["graph"] = graph_json(g);
      j["samples_per_type"] = bench_samples;
      j["delta"] = bench_delta;
      j["seed"] = bench_seed;
      j["enumeration_seconds"] = enum_s;
      j["estimation_seconds"] = est_s;
      j["speedup"] = est_s > 0 ? enum_s / est_s : 0.0;
      j["estimates_within_bounds"] = within;
      Json cmp = Json::object();
      Json je = Json::object(), jh = Json::object(), jb = Json::object();
      for (TriangleType tau : kAllTriangleTypes) {
        const int t = static_cast<int>(tau);
        je[std::string(name(tau))] = exact.by_type[t];
        jh[std::string(name(tau))] = est.triangle_estimates[t];
        jb[std::string(name(tau))] = est.triangle_bounds[t];
      }
      cmp["exact"] = std::move(je);
      cmp["estimated"] = std::move(jh);
      cmp["bounds"] = std::move(jb);
      j["triangles"] = std::move(cmp);
      emit(j, bench_o.output, out);
    }
    return 0;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const UndefinedValueError& e) {
    err << "undefined on this input: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace triadic::cli
