// Copyright 2026 The sphull Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "sphull/ellipsoid.hpp"
#include "sphull/errors.hpp"
#include "sphull/expectations.hpp"
#include "sphull/experiments.hpp"
#include "sphull/sampling.hpp"
#include "sphull/special.hpp"
#include "sphull/virtual_model.hpp"

namespace sphull::cli {
namespace {

// Bad or inconsistent arguments found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelArgs {
  std::string model = "uniform";
  long n = -1;
  double rho = -1.0;
  std::vector<double> axes;
};

struct OutputArgs {
  std::string out;
  std::string format = "csv";
};

struct Context {
  std::ostream& out;
  std::ostream& err;
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--model", m.model, "Point process")
      ->check(CLI::IsMember({"uniform", "symmetric", "poisson", "ellipsoid"}));
  cmd->add_option("--n", m.n, "Number of points (pairs for symmetric)");
  cmd->add_option("--rho", m.rho, "Poisson intensity per unit area");
  cmd->add_option("--axes", m.axes, "Ellipsoid semi-axes p,q,r")
      ->delimiter(',')
      ->expected(3);
}

void add_output_options(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_workers_option(CLI::App* cmd, int& workers) {
  cmd->add_option("--workers", workers, "Worker threads (0: all cores)")
      ->envname("SPHULL_WORKERS")
      ->check(CLI::NonNegativeNumber);
}

ProcessSpec make_process(const ModelArgs& m) {
  if (m.model == "poisson") {
    if (!(m.rho > 0.0)) throw UsageError("--model poisson requires --rho > 0");
    return ProcessSpec::poisson(m.rho);
  }
  if (m.n < 0) throw UsageError("--model " + m.model + " requires --n");
  if (m.model == "symmetric") return ProcessSpec::symmetric(m.n);
  if (m.model == "ellipsoid") {
    if (m.axes.size() != 3) throw UsageError("--model ellipsoid requires --axes p,q,r");
    return ProcessSpec::homeoid(m.n, Ellipsoid(m.axes[0], m.axes[1], m.axes[2]));
  }
  return ProcessSpec::uniform(m.n);
}

void echo_model(Table& t, const ModelArgs& m) {
  t.config.emplace_back("model", m.model);
  if (m.model == "poisson") {
    t.config.emplace_back("rho", m.rho);
  } else {
    t.config.emplace_back("n", static_cast<std::int64_t>(m.n));
  }
  if (m.model == "ellipsoid" && m.axes.size() == 3) {
    t.config.emplace_back("axes", format_double(m.axes[0]) + "/" +
                                      format_double(m.axes[1]) + "/" +
                                      format_double(m.axes[2]));
  }
}

void emit(const Table& t, const OutputArgs& o, Context& ctx) {
  auto write = [&](std::ostream& os) {
    if (o.format == "json") {
      write_json(t, os);
    } else {
      write_csv(t, os);
    }
  };
  if (o.out.empty() || o.out == "-") {
    write(ctx.out);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + o.out + " for writing");
  write(file);
  if (!file) throw std::runtime_error("failed writing " + o.out);
}

Cell i64(long long v) { return Cell(static_cast<std::int64_t>(v)); }
Cell u64(std::uint64_t v) { return Cell(static_cast<std::int64_t>(v)); }

void add_report_row(Table& t, const ZReport& r) {
  t.add_row({r.statistic, r.observed, r.analytic, r.std_error, r.z, r.threshold,
             r.pass});
}

const std::vector<std::string> kReportColumns = {
    "statistic", "observed", "analytic", "std_error", "z", "threshold", "pass"};

void add_bucket_rows(Table& t, const std::string& kind,
                     const std::vector<BucketRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BucketRow& b = rows[i];
    t.add_row({kind, i64(static_cast<long long>(i)), b.lo, b.hi, u64(b.count),
               b.observed, b.expected, b.std_error, b.z, b.pass});
  }
}

const std::vector<std::string> kBucketColumns = {
    "kind", "bucket", "lo", "hi", "count", "observed", "expected",
    "std_error", "z", "pass"};

// ---------------------------------------------------------------------------
// expect

double expect_value(const std::string& stat, const ModelArgs& m) {
  const ProcessSpec p = make_process(m);
  if (stat == "width" || stat == "area" || stat == "volume") {
    const IntrinsicIndex k = stat == "width"  ? IntrinsicIndex::kWidth
                             : stat == "area" ? IntrinsicIndex::kArea
                                              : IntrinsicIndex::kVolume;
    switch (p.kind) {
      case ProcessKind::kUniform:
        return expected_iv_uniform(k, p.n);
      case ProcessKind::kSymmetric:
        return expected_iv_symmetric(k, p.n);
      case ProcessKind::kPoisson:
        return expected_iv_poisson(k, p.rho);
      case ProcessKind::kHomeoid:
        return expected_iv_ellipsoid(k, p.n, *p.ellipsoid);
    }
  }
  if (stat == "edge-length") {
    switch (p.kind) {
      case ProcessKind::kUniform:
        return expected_edge_length_uniform(p.n);
      case ProcessKind::kPoisson:
        return expected_edge_length_poisson(p.rho);
      case ProcessKind::kHomeoid:
        return expected_edge_length_ellipsoid(p.n, *p.ellipsoid);
      case ProcessKind::kSymmetric:
        break;
    }
    throw UsageError("edge-length has no closed form for the symmetric model");
  }
  if (stat == "min-dist") {
    if (p.kind != ProcessKind::kUniform) {
      throw UsageError("min-dist is only available for the uniform model");
    }
    return expected_min_distance(p.n);
  }
  throw UsageError("unknown --stat " + stat);
}

// ---------------------------------------------------------------------------
// special

double special_value(const std::string& fn, const std::vector<double>& a) {
  const std::map<std::string, std::pair<std::size_t, std::function<double()>>> table = {
      {"bessel-i", {2, [&] { return bessel_i(a[0], a[1]); }}},
      {"bessel-i-scaled", {2, [&] { return bessel_i_scaled(a[0], a[1]); }}},
      {"beta", {2, [&] { return beta(a[0], a[1]); }}},
      {"log-beta", {2, [&] { return log_beta(a[0], a[1]); }}},
      {"ellip-f", {2, [&] { return incomplete_elliptic_f(a[0], a[1]); }}},
      {"ellip-e", {2, [&] { return incomplete_elliptic_e(a[0], a[1]); }}},
      {"ellip-k", {1, [&] { return complete_elliptic_k(a[0]); }}},
      {"carlson-rf", {3, [&] { return carlson_rf(a[0], a[1], a[2]); }}},
      {"carlson-rd", {3, [&] { return carlson_rd(a[0], a[1], a[2]); }}},
  };
  const auto it = table.find(fn);
  if (it == table.end()) throw UsageError("unknown --fn " + fn);
  if (a.size() != it->second.first) {
    throw UsageError("--fn " + fn + " takes " + std::to_string(it->second.first) +
                     " arguments");
  }
  return it->second.second();
}

void print_value(double v, Context& ctx) {
  if (!std::isfinite(v)) throw Error("result is not finite");
  ctx.out << format_double(v) << '\n';
}

std::vector<Statistic> parse_stats(const std::vector<std::string>& names) {
  std::vector<Statistic> stats;
  try {
    for (const std::string& s : names) stats.push_back(parse_statistic(s));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return stats;
}

double ball_value(Statistic s, const ProcessSpec& p) {
  IntrinsicIndex k;
  switch (s) {
    case Statistic::kWidth:
      k = IntrinsicIndex::kWidth;
      break;
    case Statistic::kArea:
      k = IntrinsicIndex::kArea;
      break;
    case Statistic::kVolume:
      k = IntrinsicIndex::kVolume;
      break;
    default:
      throw UsageError("hist supports width, area and volume only");
  }
  if (p.kind == ProcessKind::kHomeoid) return ellipsoid_intrinsic_volume(k, *p.ellipsoid);
  return ball_intrinsic_volume(k);
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Random polytopes inscribed in the sphere: sampling and exact expectations",
               "sphull"};
  app.require_subcommand(1);

  // expect
  std::string expect_stat;
  ModelArgs expect_model;
  auto* expect = app.add_subcommand("expect", "Evaluate a closed-form expectation");
  expect->add_option("--stat", expect_stat, "Statistic")
      ->required()
      ->check(CLI::IsMember({"width", "area", "volume", "edge-length", "min-dist"}));
  add_model_options(expect, expect_model);

  // simulate
  ModelArgs sim_model;
  OutputArgs sim_out;
  long sim_trials = 0;
  std::uint64_t sim_seed = 0;
  int sim_workers = 0;
  std::size_t sim_bins = 200;
  std::vector<std::string> sim_stats = {"width", "area", "volume"};
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run with z-tests");
  add_model_options(simulate, sim_model);
  simulate->add_option("--trials", sim_trials, "Number of hulls")->required();
  simulate->add_option("--seed", sim_seed, "Master seed")->required();
  simulate->add_option("--stats", sim_stats, "Statistics")->delimiter(',');
  simulate->add_option("--bins", sim_bins, "Histogram bins kept in memory");
  add_workers_option(simulate, sim_workers);
  add_output_options(simulate, sim_out);

  // hist
  ModelArgs hist_model;
  OutputArgs hist_out;
  long hist_trials = 0;
  std::uint64_t hist_seed = 0;
  int hist_workers = 0;
  std::size_t hist_bins = 50;
  std::vector<std::string> hist_stats = {"width", "area", "volume"};
  auto* hist = app.add_subcommand("hist", "Histograms of normalized statistics");
  add_model_options(hist, hist_model);
  hist->add_option("--trials", hist_trials, "Number of hulls")->required();
  hist->add_option("--seed", hist_seed, "Master seed")->required();
  hist->add_option("--stat", hist_stats, "Statistics")->delimiter(',');
  hist->add_option("--bins", hist_bins, "Bins per statistic")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  add_workers_option(hist, hist_workers);
  add_output_options(hist, hist_out);

  // curve
  std::vector<long> curve_n = {10, 40, 100, 200};
  long curve_trials = 150;
  std::uint64_t curve_seed = 0;
  int curve_workers = 0;
  std::size_t curve_points = 200;
  OutputArgs curve_out;
  auto* curve = app.add_subcommand("curve", "Scatter of hull moments and the expectation curve");
  curve->add_option("--n-list", curve_n, "Point counts")->delimiter(',');
  curve->add_option("--trials-each", curve_trials, "Hulls per point count");
  curve->add_option("--seed", curve_seed, "Master seed")->required();
  curve->add_option("--curve-points", curve_points, "Samples of the curve")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  add_workers_option(curve, curve_workers);
  add_output_options(curve, curve_out);

  // deficiency
  std::vector<long> def_n = {10, 100, 1000, 10000, 100000, 1000000};
  OutputArgs def_out;
  auto* def = app.add_subcommand("deficiency", "Expected versus model deficiencies");
  def->add_option("--n-list", def_n, "Point counts")->delimiter(',');
  add_output_options(def, def_out);

  // chords
  long chord_trials = 0;
  std::uint64_t chord_seed = 0;
  int chord_workers = 0;
  std::size_t chord_grid = 101;
  OutputArgs chord_out;
  auto* chords = app.add_subcommand("chords", "Chord length CDF with a KS test");
  chords->add_option("--trials", chord_trials, "Number of chords")->required();
  chords->add_option("--seed", chord_seed, "Master seed")->required();
  chords->add_option("--grid", chord_grid, "CDF grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  add_workers_option(chords, chord_workers);
  add_output_options(chords, chord_out);

  // mindist
  long md_n = 1;
  long md_trials = 0;
  std::uint64_t md_seed = 0;
  int md_workers = 0;
  OutputArgs md_out;
  auto* mindist = app.add_subcommand("mindist", "Distance from a fixed pole to the nearest point");
  mindist->add_option("--n", md_n, "Number of points")->required();
  mindist->add_option("--trials", md_trials, "Number of point sets")->required();
  mindist->add_option("--seed", md_seed, "Master seed")->required();
  add_workers_option(mindist, md_workers);
  add_output_options(mindist, md_out);

  // acute
  std::vector<long> acute_n = {3, 4, 10, 100};
  long acute_trials = 0;
  std::uint64_t acute_seed = 0;
  int acute_workers = 0;
  bool acute_planar = false;
  OutputArgs acute_out;
  auto* acute = app.add_subcommand("acute", "Fraction of acute facets");
  acute->add_option("--n-list", acute_n, "Point counts")->delimiter(',');
  acute->add_option("--trials", acute_trials, "Hulls per point count")->required();
  acute->add_option("--seed", acute_seed, "Master seed")->required();
  acute->add_flag("--planar-control", acute_planar,
                  "Add three points on a circle (acute with probability 1/4)");
  add_workers_option(acute, acute_workers);
  add_output_options(acute, acute_out);

  // shape-size
  long ss_n = 20;
  std::size_t ss_buckets = 10;
  long ss_trials = 0;
  std::uint64_t ss_seed = 0;
  int ss_workers = 0;
  OutputArgs ss_out;
  auto* shape = app.add_subcommand("shape-size", "Acute fraction by circumradius bucket");
  shape->add_option("--n", ss_n, "Number of points");
  shape->add_option("--buckets", ss_buckets, "Circumradius quantile buckets");
  shape->add_option("--trials", ss_trials, "Number of hulls")->required();
  shape->add_option("--seed", ss_seed, "Master seed")->required();
  add_workers_option(shape, ss_workers);
  add_output_options(shape, ss_out);

  // facet-prob
  long fp_n = 10;
  std::size_t fp_buckets = 10;
  long fp_trials = 0;
  std::uint64_t fp_seed = 0;
  int fp_workers = 0;
  OutputArgs fp_out;
  auto* facet = app.add_subcommand("facet-prob", "Probability that a triple spans a facet");
  facet->add_option("--n", fp_n, "Number of points");
  facet->add_option("--buckets", fp_buckets, "Cap-fraction buckets on [0, 1/2]");
  facet->add_option("--trials", fp_trials, "Number of triples")->required();
  facet->add_option("--seed", fp_seed, "Master seed")->required();
  add_workers_option(facet, fp_workers);
  add_output_options(facet, fp_out);

  // special
  std::string sp_fn;
  std::vector<double> sp_args;
  auto* special = app.add_subcommand("special", "Evaluate a special function");
  special->add_option("--fn", sp_fn,
                      "bessel-i, bessel-i-scaled, beta, log-beta, ellip-f, "
                      "ellip-e, ellip-k, carlson-rf, carlson-rd")
      ->required();
  special->add_option("--args", sp_args, "Comma-separated arguments")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*expect) {
      print_value(expect_value(expect_stat, expect_model), ctx);
      return kExitOk;
    }

    if (*special) {
      print_value(special_value(sp_fn, sp_args), ctx);
      return kExitOk;
    }

    if (*simulate) {
      ExperimentConfig cfg;
      cfg.process = make_process(sim_model);
      cfg.trials = sim_trials;
      cfg.seed = sim_seed;
      cfg.statistics = parse_stats(sim_stats);
      cfg.histogram_bins = sim_bins;
      cfg.workers = sim_workers;
      const RunResult r = run(cfg);
      Table t;
      t.command = "simulate";
      echo_model(t, sim_model);
      t.config.emplace_back("trials", i64(sim_trials));
      t.config.emplace_back("seed", u64(sim_seed));
      t.columns = {"statistic", "count",    "mean",     "variance", "std_error",
                   "min",       "max",      "skewness", "analytic", "z",
                   "threshold", "pass"};
      for (const StatisticResult& s : r.statistics) {
        const SummaryStats& m = s.summary;
        t.add_row({to_string(s.statistic), u64(m.count), m.mean, m.variance,
                   m.std_error, m.min, m.max, m.skewness,
                   s.report ? Cell(s.report->analytic) : Cell(),
                   s.report ? Cell(s.report->z) : Cell(),
                   s.report ? Cell(s.report->threshold) : Cell(),
                   s.report ? Cell(s.report->pass) : Cell()});
      }
      emit(t, sim_out, ctx);
      err << "trials=" << r.trials << " resampled=" << r.failed_attempts
          << " euler_violations=" << r.euler_violations
          << " chain_violations=" << r.chain_violations
          << (r.all_pass() ? " PASS" : " FAIL") << '\n';
      return r.all_pass() ? kExitOk : kExitStatFailure;
    }

    if (*hist) {
      ExperimentConfig cfg;
      cfg.process = make_process(hist_model);
      cfg.trials = hist_trials;
      cfg.seed = hist_seed;
      cfg.statistics = parse_stats(hist_stats);
      cfg.histogram_bins = hist_bins;
      cfg.workers = hist_workers;
      for (Statistic s : cfg.statistics) ball_value(s, cfg.process);
      const RunResult r = run(cfg);
      Table t;
      t.command = "hist";
      echo_model(t, hist_model);
      t.config.emplace_back("trials", i64(hist_trials));
      t.config.emplace_back("seed", u64(hist_seed));
      t.config.emplace_back("bins", u64(hist_bins));
      t.columns = {"statistic", "bin",     "lo",   "hi", "count",
                   "density",   "normalized_mean", "normalized_expected"};
      for (const StatisticResult& s : r.statistics) {
        const double ball = ball_value(s.statistic, cfg.process);
        std::vector<double> normalized(s.samples.size());
        for (std::size_t i = 0; i < s.samples.size(); ++i) {
          normalized[i] = s.samples[i] / ball;
        }
        const SummaryStats ns = summarize(normalized, hist_bins);
        const Histogram& h = ns.histogram;
        const double total = static_cast<double>(ns.count);
        const Cell expected =
            s.report ? Cell(s.report->analytic / ball) : Cell();
        for (std::size_t b = 0; b < h.counts.size(); ++b) {
          const double width = h.edges[b + 1] - h.edges[b];
          t.add_row({to_string(s.statistic), u64(b), h.edges[b], h.edges[b + 1],
                     u64(h.counts[b]),
                     static_cast<double>(h.counts[b]) / (total * width), ns.mean,
                     expected});
        }
      }
      emit(t, hist_out, ctx);
      return kExitOk;
    }

    if (*curve) {
      const ScatterResult r =
          moment_scatter(curve_n, curve_trials, curve_seed, curve_workers, curve_points);
      Table t;
      t.command = "curve";
      t.config.emplace_back("n_list", join_longs(curve_n));
      t.config.emplace_back("trials_each", i64(curve_trials));
      t.config.emplace_back("seed", u64(curve_seed));
      t.columns = {"kind", "n", "trial", "t", "width", "area", "volume", "chain_ok"};
      for (const ScatterRow& row : r.rows) {
        t.add_row({std::string("sample"), i64(row.n), i64(row.trial), Cell(),
                   row.width, row.area, row.volume, row.chain_ok});
      }
      for (const CurveSample& c : r.curve) {
        t.add_row({std::string("curve"), Cell(), Cell(), c.t, c.width, c.area,
                   c.volume, Cell()});
      }
      emit(t, curve_out, ctx);
      bool pass = r.chain_violations == 0;
      for (const ZReport& z : r.reports) pass = pass && z.pass;
      err << "rows=" << r.rows.size() << " chain_violations=" << r.chain_violations
          << (pass ? " PASS" : " FAIL") << '\n';
      return pass ? kExitOk : kExitStatFailure;
    }

    if (*def) {
      const std::vector<DeficiencyRow> rows = deficiency_table(def_n);
      Table t;
      t.command = "deficiency";
      t.config.emplace_back("n_list", join_longs(def_n));
      t.columns = {"n",
                   "expected_width",
                   "model_width",
                   "width_ratio",
                   "expected_area",
                   "model_area",
                   "area_ratio",
                   "expected_volume",
                   "model_volume",
                   "volume_ratio",
                   "expected_length_per_sqrt_n",
                   "model_length_per_sqrt_n"};
      for (const DeficiencyRow& d : rows) {
        t.add_row({i64(d.n), d.expected_width, d.model_width, d.width_ratio,
                   d.expected_area, d.model_area, d.area_ratio, d.expected_volume,
                   d.model_volume, d.volume_ratio, d.expected_length_per_sqrt_n,
                   d.model_length_per_sqrt_n});
      }
      emit(t, def_out, ctx);
      return kExitOk;
    }

    if (*chords) {
      const ChordResult r =
          chord_cdf_test({chord_trials, chord_seed, chord_workers}, chord_grid);
      Table t;
      t.command = "chords";
      t.config.emplace_back("trials", i64(chord_trials));
      t.config.emplace_back("seed", u64(chord_seed));
      t.config.emplace_back("ks", r.ks);
      t.config.emplace_back("ks_critical", r.critical);
      t.columns = {"length", "empirical_cdf", "analytic_cdf"};
      for (std::size_t i = 0; i < r.grid.size(); ++i) {
        t.add_row({r.grid[i], r.empirical[i], r.analytic[i]});
      }
      emit(t, chord_out, ctx);
      err << "ks=" << format_double(r.ks) << " critical=" << format_double(r.critical)
          << (r.pass ? " PASS" : " FAIL") << '\n';
      return r.pass ? kExitOk : kExitStatFailure;
    }

    if (*mindist) {
      const MinDistanceResult r =
          min_distance_experiment(md_n, {md_trials, md_seed, md_workers});
      Table t;
      t.command = "mindist";
      t.config.emplace_back("n", i64(md_n));
      t.config.emplace_back("trials", i64(md_trials));
      t.config.emplace_back("seed", u64(md_seed));
      t.columns = kReportColumns;
      for (const ZReport& z : r.reports) add_report_row(t, z);
      emit(t, md_out, ctx);
      return r.all_pass() ? kExitOk : kExitStatFailure;
    }

    if (*acute) {
      Table t;
      t.command = "acute";
      t.config.emplace_back("n_list", join_longs(acute_n));
      t.config.emplace_back("trials", i64(acute_trials));
      t.config.emplace_back("seed", u64(acute_seed));
      t.columns = {"case", "n", "facets", "observed", "analytic", "std_error", "z",
                   "pass"};
      bool pass = true;
      auto add = [&](const std::string& name, Cell n, const AcuteResult& r) {
        t.add_row({name, n, u64(r.summary.count), r.report.observed,
                   r.report.analytic, r.report.std_error, r.report.z, r.report.pass});
        pass = pass && r.report.pass;
      };
      for (long n : acute_n) {
        add("sphere", i64(n), acute_fraction(n, {acute_trials, acute_seed, acute_workers}));
      }
      if (acute_planar) {
        add("circle", i64(3),
            planar_acute_control({acute_trials, acute_seed, acute_workers}));
      }
      emit(t, acute_out, ctx);
      return pass ? kExitOk : kExitStatFailure;
    }

    if (*shape) {
      const ShapeSizeResult r =
          shape_size_independence(ss_n, ss_buckets, {ss_trials, ss_seed, ss_workers});
      Table t;
      t.command = "shape-size";
      t.config.emplace_back("n", i64(ss_n));
      t.config.emplace_back("trials", i64(ss_trials));
      t.config.emplace_back("seed", u64(ss_seed));
      t.config.emplace_back("chi_square", r.chi_square);
      t.config.emplace_back("chi_square_critical", r.chi_square_critical);
      t.columns = kBucketColumns;
      add_bucket_rows(t, "circumradius", r.buckets);
      const ZReport& c = r.circumcircle_control;
      t.add_row({std::string("circumcircle_control"), Cell(), Cell(), Cell(), Cell(),
                 c.observed, c.analytic, c.std_error, c.z, c.pass});
      emit(t, ss_out, ctx);
      err << "chi_square=" << format_double(r.chi_square)
          << " critical=" << format_double(r.chi_square_critical)
          << (r.all_pass() ? " PASS" : " FAIL") << '\n';
      return r.all_pass() ? kExitOk : kExitStatFailure;
    }

    if (*facet) {
      const FacetProbabilityResult r =
          facet_probability_check(fp_n, fp_buckets, {fp_trials, fp_seed, fp_workers});
      Table t;
      t.command = "facet-prob";
      t.config.emplace_back("n", i64(fp_n));
      t.config.emplace_back("trials", i64(fp_trials));
      t.config.emplace_back("seed", u64(fp_seed));
      t.columns = kBucketColumns;
      add_bucket_rows(t, "cap_fraction", r.buckets);
      emit(t, fp_out, ctx);
      return r.all_pass() ? kExitOk : kExitStatFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace sphull::cli
