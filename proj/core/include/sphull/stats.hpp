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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sphull {

struct Histogram {
  std::vector<double> edges;          // bins + 1 increasing edges
  std::vector<std::uint64_t> counts;  // one per bin
};

// Equal-width bins on [lo, hi]. Values outside are clamped into the end bins
// so that the counts always sum to the sample size.
Histogram make_histogram(std::span<const double> values, std::size_t bins,
                         double lo, double hi);

// One-pass mean, variance and third central moment (Welford / Terriberry).
// Adding the same values in the same order gives bit-identical results.
class Accumulator {
 public:
  void add(double x);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;  // unbiased; 0 for fewer than two values
  double skewness() const;  // population skewness; 0 if undefined
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

struct SummaryStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;  // sqrt(variance / count)
  double min = 0.0;
  double max = 0.0;
  double skewness = 0.0;
  Histogram histogram;  // empty unless requested
};

SummaryStats summarize(const Accumulator& acc);

// Accumulates `values` in order; a histogram with `bins` bins over [min, max]
// is attached when bins >= 2.
SummaryStats summarize(std::span<const double> values, std::size_t bins = 0);

inline constexpr double kDefaultZThreshold = 4.0;

struct ZReport {
  std::string statistic;
  double observed = 0.0;
  double analytic = 0.0;
  double std_error = 0.0;
  double z = 0.0;  // (observed - analytic) / std_error
  double threshold = kDefaultZThreshold;
  bool pass = false;
};

// A zero standard error gives z = 0 on an exact match and infinity otherwise.
ZReport make_zreport(const std::string& statistic, double observed,
                     double analytic, double std_error,
                     double threshold = kDefaultZThreshold);

ZReport make_zreport(const std::string& statistic, const SummaryStats& s,
                     double analytic, double threshold = kDefaultZThreshold);

// sup_x |F_m(x) - cdf(x)| for the empirical CDF of `samples`.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Asymptotic 99% critical value 1.63 / sqrt(m).
double ks_critical_99(std::size_t m);

// Quantile of the chi-square distribution with `dof` degrees of freedom.
double chi_square_quantile(double dof, double probability);

}  // namespace sphull
