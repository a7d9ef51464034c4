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

#include "sphull/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "sphull/errors.hpp"

namespace sphull {

Histogram make_histogram(std::span<const double> values, std::size_t bins,
                         double lo, double hi) {
  if (bins < 1) throw DomainError("make_histogram: need at least one bin");
  if (!(hi > lo)) {
    // Constant sample: widen to a unit interval around it.
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = lo + width * static_cast<double>(i);
  }
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);
  for (double v : values) {
    double pos = (v - lo) / width;
    std::size_t bin = 0;
    if (pos >= static_cast<double>(bins)) {
      bin = bins - 1;
    } else if (pos > 0.0) {
      bin = static_cast<std::size_t>(pos);
    }
    ++h.counts[bin];
  }
  return h;
}

void Accumulator::add(double x) {
  if (count_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  const double n1 = static_cast<double>(count_);
  ++count_;
  const double n = static_cast<double>(count_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
  m2_ += term1;
}

double Accumulator::variance() const {
  if (count_ < 2) return 0.0;
  return m2_ / static_cast<double>(count_ - 1);
}

double Accumulator::skewness() const {
  if (count_ < 2 || m2_ <= 0.0) return 0.0;
  const double n = static_cast<double>(count_);
  return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
}

SummaryStats summarize(const Accumulator& acc) {
  SummaryStats s;
  s.count = acc.count();
  s.mean = acc.mean();
  s.variance = acc.variance();
  s.std_error =
      s.count > 0 ? std::sqrt(s.variance / static_cast<double>(s.count)) : 0.0;
  s.min = acc.min();
  s.max = acc.max();
  s.skewness = acc.skewness();
  return s;
}

SummaryStats summarize(std::span<const double> values, std::size_t bins) {
  Accumulator acc;
  for (double v : values) acc.add(v);
  SummaryStats s = summarize(acc);
  if (bins >= 2 && !values.empty()) {
    s.histogram = make_histogram(values, bins, s.min, s.max);
  }
  return s;
}

ZReport make_zreport(const std::string& statistic, double observed,
                     double analytic, double std_error, double threshold) {
  ZReport r;
  r.statistic = statistic;
  r.observed = observed;
  r.analytic = analytic;
  r.std_error = std_error;
  r.threshold = threshold;
  const double diff = observed - analytic;
  if (std_error > 0.0) {
    r.z = diff / std_error;
  } else {
    r.z = diff == 0.0 ? 0.0 : std::copysign(
                                  std::numeric_limits<double>::infinity(), diff);
  }
  r.pass = std::abs(r.z) <= threshold;
  return r;
}

ZReport make_zreport(const std::string& statistic, const SummaryStats& s,
                     double analytic, double threshold) {
  return make_zreport(statistic, s.mean, analytic, s.std_error, threshold);
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, static_cast<double>(i + 1) / m - f);
    d = std::max(d, f - static_cast<double>(i) / m);
  }
  return d;
}

double ks_critical_99(std::size_t m) {
  if (m == 0) throw DomainError("ks_critical_99: m must be positive");
  return 1.63 / std::sqrt(static_cast<double>(m));
}

double chi_square_quantile(double dof, double probability) {
  if (!(dof > 0.0) || !(probability > 0.0) || !(probability < 1.0)) {
    throw DomainError("chi_square_quantile: requires dof > 0, 0 < p < 1");
  }
  return boost::math::quantile(boost::math::chi_squared(dof), probability);
}

}  // namespace sphull
