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

// Acceptance suite. Runs every primary criterion at full size with the seeds
// in manifest.json and prints one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails.

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "sphull/ellipsoid.hpp"
#include "sphull/expectations.hpp"
#include "sphull/experiments.hpp"
#include "sphull/hull.hpp"
#include "sphull/metrics.hpp"
#include "sphull/random.hpp"
#include "sphull/sampling.hpp"
#include "sphull/special.hpp"
#include "sphull/virtual_model.hpp"

namespace sphull {
namespace {

using nlohmann::json;
using std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Structural counters accumulated over every sampled hull in the suite.
struct Structure {
  long hulls = 0;
  long euler_violations = 0;
  long chain_violations = 0;

  void add(const RunResult& r) {
    hulls += r.trials;
    euler_violations += r.euler_violations;
    chain_violations += r.chain_violations;
  }
};

Structure g_structure;

void add_reports(Outcome& o, const RunResult& r, const std::string& label) {
  for (const StatisticResult& s : r.statistics) {
    if (!s.report) continue;
    const ZReport& z = *s.report;
    o.check(z.pass, label + " " + z.statistic + " z=" + fmt(z.z, 3));
    o.note(label + " " + z.statistic + " z=" + fmt(z.z, 3));
  }
}

void add_report(Outcome& o, const ZReport& z, const std::string& label) {
  o.check(z.pass, label + " " + z.statistic + " z=" + fmt(z.z, 3));
  o.note(label + " " + z.statistic + " z=" + fmt(z.z, 3));
}

RunResult run_stats(const ProcessSpec& p, long trials, std::uint64_t seed,
                    std::vector<Statistic> stats) {
  ExperimentConfig c;
  c.process = p;
  c.trials = trials;
  c.seed = seed;
  c.statistics = std::move(stats);
  c.histogram_bins = 2;
  const RunResult r = run(c);
  g_structure.add(r);
  return r;
}

const std::vector<Statistic> kIntrinsic = {Statistic::kWidth, Statistic::kArea,
                                           Statistic::kVolume};

const StatisticResult& find(const RunResult& r, Statistic s) {
  for (const StatisticResult& x : r.statistics) {
    if (x.statistic == s) return x;
  }
  throw std::logic_error("statistic missing from run");
}

// ---------------------------------------------------------------------------

Outcome uniform_moments(const json& m) {
  Outcome o;
  for (long n : m["n"].get<std::vector<long>>()) {
    add_reports(o, run_stats(ProcessSpec::uniform(n), m["trials"], m["seed"], kIntrinsic),
                "n=" + std::to_string(n));
  }
  return o;
}

Outcome symmetric_moments(const json& m) {
  Outcome o;
  o.check(rel_err(expected_iv_symmetric(IntrinsicIndex::kVolume, 3), pi / 6) <= 1e-15,
          "n=3 volume target pi/6");
  for (long n : m["n"].get<std::vector<long>>()) {
    add_reports(o,
                run_stats(ProcessSpec::symmetric(n), m["trials"], m["seed"], kIntrinsic),
                "n=" + std::to_string(n));
  }
  return o;
}

Outcome poisson_moments(const json& m) {
  Outcome o;
  for (double rho : m["rho"].get<std::vector<double>>()) {
    add_reports(o, run_stats(ProcessSpec::poisson(rho), m["trials"], m["seed"], kIntrinsic),
                "rho=" + fmt(rho));
  }
  return o;
}

Outcome poisson_series(const json& m) {
  Outcome o;
  double worst = 0.0;
  for (double rho : m["rho"].get<std::vector<double>>()) {
    for (int k = 1; k <= 3; ++k) {
      const IntrinsicIndex idx = intrinsic_index(k);
      const double series = oracle::poisson_mixture(
          [&](long n) { return n == 0 ? 0.0 : expected_iv_uniform(idx, n); }, 4.0 * pi * rho);
      const double err = rel_err(expected_iv_poisson(idx, rho), series);
      worst = std::max(worst, err);
      o.check(err <= 1e-10, "rho=" + fmt(rho) + " k=" + std::to_string(k));
    }
  }
  o.note("max rel err " + fmt(worst, 3));
  return o;
}

Outcome edge_length(const json& m) {
  Outcome o;
  const long n = m["n"];
  const double formula = 120.0 * (512.0 / (3.0 * pi)) * boost::math::beta(9.5, 2.5);
  o.check(n != 10 || rel_err(expected_edge_length_uniform(10), formula) <= 1e-12,
          "closed form n=10 vs binomial-beta expression");
  add_reports(o,
              run_stats(ProcessSpec::uniform(n), m["trials"], m["seed"],
                        {Statistic::kEdgeLength}),
              "n=" + std::to_string(n));
  const double rho = m["poisson_rho"];
  add_reports(o,
              run_stats(ProcessSpec::poisson(rho), m["poisson_trials"], m["poisson_seed"],
                        {Statistic::kEdgeLength}),
              "rho=" + fmt(rho));
  const long big = m["asymptotic_n"];
  const double ratio = expected_edge_length_uniform(big) /
                       (edge_length_constant() * std::sqrt(static_cast<double>(big)));
  o.check(std::abs(ratio - 1.0) <= 1e-3, "asymptotic ratio");
  o.note("asymptotic ratio " + fmt(ratio, 8));
  const double constant = m["reference_constant"];
  o.check(std::abs(edge_length_constant() - constant) <= 1e-3,
          "constant 64/(3 sqrt pi) vs " + fmt(constant));
  return o;
}

Outcome acute(const json& m) {
  Outcome o;
  for (long n : m["n"].get<std::vector<long>>()) {
    add_report(o, acute_fraction(n, {m["trials"], m["seed"], 0}).report,
               "n=" + std::to_string(n));
  }
  add_report(o, planar_acute_control({m["planar_trials"], m["planar_seed"], 0}).report,
             "circle");
  return o;
}

Outcome min_distance(const json& m) {
  Outcome o;
  o.check(expected_min_distance(1) == 4.0 / 3.0, "n=1 target 4/3");
  for (long n : m["n"].get<std::vector<long>>()) {
    const MinDistanceResult r = min_distance_experiment(n, {m["trials"], m["seed"], 0});
    for (const ZReport& z : r.reports) add_report(o, z, "n=" + std::to_string(n));
  }
  return o;
}

Outcome chords(const json& m) {
  Outcome o;
  const ChordResult r = chord_cdf_test({m["trials"], m["seed"], 0});
  o.check(r.pass, "KS below 99% bound");
  o.note("ks=" + fmt(r.ks, 4) + " bound=" + fmt(r.critical, 4));
  return o;
}

Outcome shape_size(const json& m) {
  Outcome o;
  const ShapeSizeResult r =
      shape_size_independence(m["n"], m["buckets"], {m["trials"], m["seed"], 0});
  double worst = 0.0;
  for (std::size_t i = 0; i < r.buckets.size(); ++i) {
    o.check(r.buckets[i].pass, "bucket " + std::to_string(i));
    worst = std::max(worst, std::abs(r.buckets[i].z));
  }
  o.check(r.chi_square_pass, "chi-square");
  o.note("max |z|=" + fmt(worst, 3) + " chi2=" + fmt(r.chi_square, 4) +
         " crit=" + fmt(r.chi_square_critical, 4));
  return o;
}

Outcome facet_probability(const json& m) {
  Outcome o;
  const FacetProbabilityResult r =
      facet_probability_check(m["n"], m["buckets"], {m["triples"], m["seed"], 0});
  double worst = 0.0;
  for (std::size_t i = 0; i < r.buckets.size(); ++i) {
    o.check(r.buckets[i].pass, "bucket " + std::to_string(i));
    worst = std::max(worst, std::abs(r.buckets[i].z));
  }
  o.note("max |z|=" + fmt(worst, 3));
  return o;
}

Outcome special_functions() {
  Outcome o;
  double bessel = 0.0;
  for (int i = 0; i <= 499; ++i) {
    const double x = 0.1 + (50.0 - 0.1) * i / 499.0;
    bessel = std::max(bessel, rel_err(bessel_i(0.5, x), oracle::bessel_i_half(x)));
    bessel = std::max(bessel,
                      rel_err(bessel_i(1.5, x), oracle::bessel_i_three_halves(x)));
  }
  o.check(bessel <= 1e-12, "half-integer Bessel");

  double identity = 0.0;
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i <= 200; ++i) {
      const double z = 0.1 + (60.0 - 0.1) * i / 200.0;
      const SeriesIdentity s = bessel_series_identity(k, z);
      identity = std::max(identity, rel_err(s.lhs, s.rhs));
    }
  }
  o.check(identity <= 1e-10, "series identity");

  double lengths = 0.0;
  for (long n : {3L, 4L, 10L, 57L, 100L, 1000L}) {
    lengths = std::max(lengths, rel_err(j_length(n), oracle::j_length_t(n)));
    lengths = std::max(lengths, rel_err(j_length(n), oracle::j_length_s(n)));
  }
  for (double rho : {0.05, 0.5, 1.0, 4.0, 20.0}) {
    lengths = std::max(lengths, rel_err(k_length(rho), oracle::k_length_t(rho)));
    lengths = std::max(lengths, rel_err(k_length(rho), oracle::k_length_s(rho)));
  }
  o.check(lengths <= 1e-9, "J/K length integrals");

  double elliptic = 0.0;
  for (double k : {0.0, 0.3, 0.7, 0.95, 0.999}) {
    for (double phi : {0.1, 0.6, 1.2, pi / 2, 2.5, 7.0}) {
      elliptic = std::max(elliptic, rel_err(incomplete_elliptic_f(phi, k),
                                            oracle::elliptic_f(phi, k)));
      elliptic = std::max(elliptic, rel_err(incomplete_elliptic_e(phi, k),
                                            oracle::elliptic_e(phi, k)));
    }
  }
  o.check(elliptic <= 1e-10, "elliptic F/E");
  o.note("bessel " + fmt(bessel, 2) + ", identity " + fmt(identity, 2) + ", J/K " +
         fmt(lengths, 2) + ", elliptic " + fmt(elliptic, 2));
  return o;
}

Outcome mean_width_kernel(const json& m) {
  Outcome o;
  const std::size_t dirs = m["directions"];
  const double sigma = m["sigma"];
  const std::uint64_t seed = m["seed"];
  std::vector<std::vector<Vec3>> sets;
  const double a = 1.0 / std::sqrt(3.0);
  sets.push_back({{a, a, a}, {a, -a, -a}, {-a, a, -a}, {-a, -a, a}});
  sets.push_back({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  const int random_hulls = m["random_hulls"];
  for (int i = 0; i < random_hulls; ++i) {
    RandomStream rng(seed, static_cast<std::uint64_t>(i));
    const std::size_t n = 4 + static_cast<std::size_t>(rng.next_u64() % 60);
    std::vector<Vec3> pts;
    for (const UnitVec3& u : sample_uniform_sphere(n, rng)) pts.push_back(u.vec());
    sets.push_back(std::move(pts));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const ConvexPolytope3 p = convex_hull(sets[i]);
    const oracle::Estimate mc = oracle::projection_width_mc(sets[i], dirs, seed + 7 * i);
    const double z = (mean_width(p) - mc.mean) / mc.std_error;
    worst = std::max(worst, std::abs(z));
    o.check(std::abs(z) <= sigma, "hull " + std::to_string(i) + " z=" + fmt(z, 3));
  }
  o.note(std::to_string(sets.size()) + " hulls, max |z|=" + fmt(worst, 3));
  return o;
}

Outcome deficiency_constants(const json& m) {
  Outcome o;
  const double tol = m["tolerance"];
  const DeficiencyRow row = deficiency_row(m["n"]);
  const DeficiencyRatios lim = deficiency_ratio_limits();
  const double wa = m["width_area_ratio"], vr = m["volume_ratio"],
               lc = m["length_constant"];
  o.check(std::abs(row.width_ratio - wa) <= tol, "width ratio vs " + fmt(wa));
  o.check(std::abs(row.area_ratio - wa) <= tol, "area ratio vs " + fmt(wa));
  o.check(std::abs(row.volume_ratio - vr) <= tol, "volume ratio vs " + fmt(vr));
  o.check(std::abs(row.model_length_per_sqrt_n - lc) <= tol, "length vs " + fmt(lc));
  o.check(std::abs(row.width_ratio - lim.width) <= tol, "width ratio vs limit");
  o.check(std::abs(row.volume_ratio - lim.volume) <= tol, "volume ratio vs limit");
  o.check(std::abs(row.model_length_per_sqrt_n - model_length_constant()) <= tol,
          "length vs limit");
  o.note("width " + fmt(row.width_ratio, 7) + ", area " + fmt(row.area_ratio, 7) +
         ", volume " + fmt(row.volume_ratio, 7) + ", length " +
         fmt(row.model_length_per_sqrt_n, 7));
  return o;
}

Outcome ellipsoid(const json& m) {
  Outcome o;
  const Ellipsoid ball = Ellipsoid::unit_ball();
  double reduce = 0.0;
  reduce = std::max(reduce, rel_err(ellipsoid_volume(ball), 4.0 * pi / 3.0));
  reduce = std::max(reduce, rel_err(ellipsoid_area(ball), 4.0 * pi));
  reduce = std::max(reduce, rel_err(ellipsoid_width(ball), 2.0));
  for (long n : {4L, 10L, 100L}) {
    for (int k = 1; k <= 3; ++k) {
      const IntrinsicIndex idx = intrinsic_index(k);
      reduce = std::max(reduce, rel_err(expected_iv_ellipsoid(idx, n, ball),
                                        expected_iv_uniform(idx, n)));
    }
    reduce = std::max(reduce, rel_err(expected_edge_length_ellipsoid(n, ball),
                                      expected_edge_length_uniform(n)));
  }
  o.check(reduce <= 1e-12, "unit ball reduction");

  const std::vector<double> ax = m["axes"];
  const Ellipsoid e(ax[0], ax[1], ax[2]);
  const double area_err = rel_err(ellipsoid_area(e), oracle::ellipsoid_area(ax[0], ax[1], ax[2]));
  o.check(area_err <= 1e-8, "area vs surface quadrature");
  const long n = m["n"];
  add_reports(o, run_stats(ProcessSpec::homeoid(n, e), m["trials"], m["seed"], kIntrinsic),
              "n=" + std::to_string(n));
  o.note("reduction " + fmt(reduce, 2) + ", area " + fmt(area_err, 2));
  return o;
}

Outcome structure(const json& m) {
  Outcome o;
  const long instances = m["instances"];
  const long max_n = m["max_n"];
  const std::uint64_t seed = m["seed"];
  long mismatches = 0;
  for (long i = 0; i < instances; ++i) {
    RandomStream rng(seed, static_cast<std::uint64_t>(i));
    const std::size_t n = 4 + static_cast<std::size_t>(rng.next_u64() % (max_n - 3));
    std::vector<Vec3> pts;
    for (const UnitVec3& u : sample_uniform_sphere(n, rng)) pts.push_back(u.vec());
    const ConvexPolytope3 p = convex_hull(pts);
    oracle::TriangleSet got;
    for (Facet f : p.facets()) {
      std::sort(f.begin(), f.end());
      got.insert(f);
    }
    if (got != oracle::brute_force_facets(pts)) ++mismatches;
  }
  o.check(mismatches == 0, "brute-force facet sets");
  o.check(g_structure.euler_violations == 0, "Euler counts");
  o.check(g_structure.chain_violations == 0, "normalized chain");
  o.note(std::to_string(instances) + " brute-force instances, " +
         std::to_string(mismatches) + " mismatches; " +
         std::to_string(g_structure.hulls) + " sampled hulls, " +
         std::to_string(g_structure.euler_violations) + " Euler and " +
         std::to_string(g_structure.chain_violations) + " chain violations");
  return o;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"sphull"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome determinism(const json& m) {
  Outcome o;
  const std::vector<int> workers = m["workers"];
  ExperimentConfig c;
  c.process = ProcessSpec::uniform(m["n"]);
  c.trials = m["trials"];
  c.seed = m["seed"];
  c.statistics = {Statistic::kWidth, Statistic::kArea, Statistic::kVolume,
                  Statistic::kEdgeLength, Statistic::kAcuteFraction};
  std::vector<RunResult> runs;
  std::vector<std::string> csv;
  for (int w : workers) {
    c.workers = w;
    runs.push_back(run(c));
    csv.push_back(cli_output({"simulate", "--model", "uniform", "--n",
                              std::to_string(c.process.n), "--trials",
                              std::to_string(c.trials), "--seed",
                              std::to_string(c.seed), "--stats",
                              "width,area,volume,edge_length,acute_fraction",
                              "--workers", std::to_string(w)}));
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    bool same = runs[i].statistics.size() == runs[0].statistics.size();
    for (std::size_t s = 0; same && s < runs[0].statistics.size(); ++s) {
      const auto& a = runs[0].statistics[s].samples;
      const auto& b = runs[i].statistics[s].samples;
      same = a.size() == b.size() &&
             std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
    }
    o.check(same, "samples identical for workers=" + std::to_string(workers[i]));
    o.check(csv[i] == csv[0], "CSV identical for workers=" + std::to_string(workers[i]));
  }
  o.note(std::to_string(workers.size()) + " worker counts, " +
         std::to_string(csv[0].size()) + " CSV bytes each");
  return o;
}

Outcome mean_ordering(const json& m) {
  Outcome o;
  const long n = m["n"];
  const RunResult r = run_stats(ProcessSpec::uniform(n), m["trials"], m["seed"], kIntrinsic);
  const double w = find(r, Statistic::kWidth).summary.mean / 2.0;
  const double a = find(r, Statistic::kArea).summary.mean / (4.0 * pi);
  const double v = find(r, Statistic::kVolume).summary.mean / (4.0 * pi / 3.0);
  o.check(w > a && a > v, "normalized means decrease width > area > volume");
  add_reports(o, r, "n=" + std::to_string(n));
  o.note("normalized means " + fmt(w, 8) + " > " + fmt(a, 8) + " > " + fmt(v, 8));
  return o;
}

Outcome scatter(const json& m) {
  Outcome o;
  const std::vector<long> ns = m["n"];
  const long each = m["trials_each"];
  const ScatterResult r = moment_scatter(ns, each, m["seed"]);
  o.check(r.rows.size() == ns.size() * static_cast<std::size_t>(each), "row count");
  long broken = 0;
  for (const ScatterRow& row : r.rows) broken += row.chain_ok ? 0 : 1;
  o.check(broken == 0 && r.chain_violations == 0, "chain on every row");
  for (const ZReport& z : r.reports) o.check(z.pass, z.statistic + " z=" + fmt(z.z, 3));
  o.note(std::to_string(r.rows.size()) + " rows, " + std::to_string(r.curve.size()) +
         " curve samples");
  return o;
}

}  // namespace
}  // namespace sphull

int main(int argc, char** argv) {
  using sphull::Outcome;
  if (argc != 2) {
    std::cerr << "usage: sphull_acceptance manifest.json\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << '\n';
    return 2;
  }
  const nlohmann::json m = nlohmann::json::parse(in);

  // Structural invariants come last so they cover every sampled hull above.
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"intrinsic_volumes_uniform", [&] { return sphull::uniform_moments(m["uniform"]); }},
      {"intrinsic_volumes_symmetric", [&] { return sphull::symmetric_moments(m["symmetric"]); }},
      {"intrinsic_volumes_poisson", [&] { return sphull::poisson_moments(m["poisson"]); }},
      {"poisson_series_equivalence", [&] { return sphull::poisson_series(m["poisson"]); }},
      {"total_edge_length", [&] { return sphull::edge_length(m["edge_length"]); }},
      {"acute_facets", [&] { return sphull::acute(m["acute"]); }},
      {"minimum_distance", [&] { return sphull::min_distance(m["min_distance"]); }},
      {"chord_cdf", [&] { return sphull::chords(m["chords"]); }},
      {"shape_size_independence", [&] { return sphull::shape_size(m["shape_size"]); }},
      {"facet_cap_probability", [&] { return sphull::facet_probability(m["facet_probability"]); }},
      {"special_functions", [&] { return sphull::special_functions(); }},
      {"mean_width_kernel", [&] { return sphull::mean_width_kernel(m["mean_width_kernel"]); }},
      {"deficiency_constants", [&] { return sphull::deficiency_constants(m["deficiency"]); }},
      {"ellipsoid", [&] { return sphull::ellipsoid(m["ellipsoid"]); }},
      {"determinism", [&] { return sphull::determinism(m["determinism"]); }},
      {"normalized_mean_ordering", [&] { return sphull::mean_ordering(m["mean_ordering"]); }},
      {"moment_scatter", [&] { return sphull::scatter(m["moment_scatter"]); }},
      {"structural_invariants", [&] { return sphull::structure(m["structure"]); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << sphull::fmt(secs, 3)
              << "s): " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
