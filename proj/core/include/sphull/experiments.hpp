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

// Monte Carlo experiments. Trial i always draws from RandomStream(seed, i)
// and results are reduced in trial order, so every output is a function of
// the configuration alone, whatever the number of worker threads.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphull/sampling.hpp"
#include "sphull/stats.hpp"
#include "sphull/virtual_model.hpp"

namespace sphull {

enum class Statistic {
  kWidth,
  kArea,
  kVolume,
  kEdgeLength,
  kAcuteFraction,
  kMinDistance,
  kFacetCaps,
  kChordCdf,
};

std::string to_string(Statistic s);

// Accepts the names to_string produces, plus "edge-length" style dashes.
// Throws DomainError on anything else.
Statistic parse_statistic(const std::string& name);

// Worker count to use: `requested` when positive, else the hardware
// concurrency (at least one).
unsigned resolve_workers(int requested);

struct ExperimentConfig {
  ProcessSpec process = ProcessSpec::uniform(4);
  long trials = 1;
  std::uint64_t seed = 0;
  std::vector<Statistic> statistics;
  std::size_t histogram_bins = 200;
  int workers = 0;
};

struct StatisticResult {
  Statistic statistic = Statistic::kWidth;
  SummaryStats summary;
  std::optional<ZReport> report;  // when a closed form exists
  std::vector<double> samples;    // one per trial, in trial order
};

struct RunResult {
  std::vector<StatisticResult> statistics;
  long trials = 0;
  long failed_attempts = 0;   // degenerate draws that were resampled
  long euler_violations = 0;  // V - E + F != 2 or 2E != 3F
  long chain_violations = 0;  // normalized width >= area >= volume broken

  bool all_pass() const;
};

// Expected value of `s` under `process`, when known in closed form.
// Statistic::kFacetCaps (the per-hull fraction of small facets) has none.
std::optional<double> analytic_value(Statistic s, const ProcessSpec& process);

// Throws DomainError on an invalid config, and Error when more than 0.01% of
// trials needed a resample.
RunResult run(const ExperimentConfig& config);

struct TrialOptions {
  long trials = 1;
  std::uint64_t seed = 0;
  int workers = 0;
};

// Fraction of acute facets per uniform hull; analytic value 1/2 for n >= 3.
struct AcuteResult {
  SummaryStats summary;
  ZReport report;
};
AcuteResult acute_fraction(long n, const TrialOptions& options);

// Three uniform points on the unit circle; acute with probability 1/4.
AcuteResult planar_acute_control(const TrialOptions& options);

struct BucketRow {
  double lo = 0.0;  // bucket range of the bucketing variable
  double hi = 0.0;
  std::uint64_t count = 0;
  double observed = 0.0;
  double expected = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  bool pass = false;
};

// Facets of uniform hulls bucketed by circumradius quantile, with the acute
// fraction per bucket against 1/2. Standard errors treat each hull as a
// cluster, since facets of one hull are dependent. As a control, every
// facet's vertices are redrawn uniformly on its circumcircle, which makes the
// acute probability 1/4.
struct ShapeSizeResult {
  std::vector<BucketRow> buckets;
  double chi_square = 0.0;  // sum of squared bucket z-scores
  double chi_square_critical = 0.0;  // 99% quantile, one dof per bucket
  bool chi_square_pass = false;
  ZReport circumcircle_control;  // against 1/4
  bool all_pass() const;
};
ShapeSizeResult shape_size_independence(long n, std::size_t buckets,
                                        const TrialOptions& options);

// For one random triple of n uniform points with small-cap fraction beta,
// whether the other n - 3 points all avoid the small cap; compared with
// (1 - beta)^(n - 3) in equal-width beta buckets on [0, 1/2].
struct FacetProbabilityResult {
  std::vector<BucketRow> buckets;
  bool all_pass() const;
};
FacetProbabilityResult facet_probability_check(long n, std::size_t buckets,
                                               const TrialOptions& options);

// Kolmogorov-Smirnov test of chord lengths against the CDF l^2 / 4.
struct ChordResult {
  std::size_t samples = 0;
  double ks = 0.0;
  double critical = 0.0;
  bool pass = false;
  // Empirical and analytic CDF on an even grid of lengths in [0, 2].
  std::vector<double> grid;
  std::vector<double> empirical;
  std::vector<double> analytic;
};
double chord_cdf(double length);
ChordResult chord_cdf_test(const TrialOptions& options,
                           std::size_t grid_points = 101);

struct ScatterRow {
  long n = 0;
  long trial = 0;
  double width = 0.0;
  double area = 0.0;
  double volume = 0.0;
  bool chain_ok = false;
};

struct CurveSample {
  double t = 0.0;
  double width = 0.0;
  double area = 0.0;
  double volume = 0.0;
};

// Width, area and volume of `trials_each` uniform hulls per n, plus samples
// of the expectation curve on [3, max n] for overlay, and a z-report per n
// and statistic against the exact expectation.
struct ScatterResult {
  std::vector<ScatterRow> rows;
  std::vector<CurveSample> curve;
  std::vector<ZReport> reports;
  long chain_violations = 0;
};
ScatterResult moment_scatter(const std::vector<long>& n_list, long trials_each,
                             std::uint64_t seed, int workers = 0,
                             std::size_t curve_points = 200);

std::vector<DeficiencyRow> deficiency_table(const std::vector<long>& n_list);

// Distances from the north pole to n uniform points: E[R], E[Phi], E[R^2].
struct MinDistanceResult {
  SummaryStats euclidean;
  SummaryStats spherical;
  SummaryStats squared;
  std::vector<ZReport> reports;
  bool all_pass() const;
};
MinDistanceResult min_distance_experiment(long n, const TrialOptions& options);

// Largest width, area and volume seen over the trials next to the virtual
// model's values. Purely observational.
struct ConjectureReport {
  long n = 0;
  double max_width = 0.0;
  double max_area = 0.0;
  double max_volume = 0.0;
  ModelQuantities model;
  bool width_exceeded = false;
  bool area_exceeded = false;
  bool volume_exceeded = false;
};
ConjectureReport conjecture_probe(long n, const TrialOptions& options);

}  // namespace sphull
