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

#include "sphull/expectations.hpp"

#include <cmath>
#include <numbers>

#include "sphull/errors.hpp"
#include "sphull/special.hpp"

namespace sphull {
namespace {

constexpr double kPi = std::numbers::pi;

// Above this n the double-factorial products are replaced by lgamma.
constexpr long kProductLimit = 4096;

}  // namespace

IntrinsicIndex intrinsic_index(int k) {
  if (k < 1 || k > 3) throw DomainError("intrinsic volume index must be 1, 2 or 3");
  return static_cast<IntrinsicIndex>(k);
}

double ball_intrinsic_volume(IntrinsicIndex k) {
  switch (k) {
    case IntrinsicIndex::kWidth:
      return 2.0;
    case IntrinsicIndex::kArea:
      return 4.0 * kPi;
    case IntrinsicIndex::kVolume:
      return 4.0 * kPi / 3.0;
  }
  throw DomainError("unknown intrinsic volume index");
}

double uniform_factor(IntrinsicIndex k, double t) {
  double f = 1.0;
  for (int j = 1; j <= static_cast<int>(k); ++j) f *= (t - j) / (t + j);
  return f;
}

double expected_iv_uniform(IntrinsicIndex k, long n) {
  if (n < 1) throw DomainError("expected_iv_uniform: requires n >= 1");
  if (n <= static_cast<long>(k)) return 0.0;
  return ball_intrinsic_volume(k) *
         uniform_factor(k, static_cast<double>(n));
}

double expected_iv_symmetric(IntrinsicIndex k, long n) {
  if (n < 3) throw DomainError("expected_iv_symmetric: requires n >= 3");
  const double m = static_cast<double>(n);
  double f = 0.0;
  switch (k) {
    case IntrinsicIndex::kWidth:
      f = m / (m + 1.0);
      break;
    case IntrinsicIndex::kArea:
      f = (m - 1.0) / (m + 2.0);
      break;
    case IntrinsicIndex::kVolume:
      f = m * (m - 2.0) / ((m + 1.0) * (m + 3.0));
      break;
  }
  return ball_intrinsic_volume(k) * f;
}

double poisson_factor(IntrinsicIndex k, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("poisson_factor: requires finite rho > 0");
  }
  const double x = 2.0 * kPi * rho;
  return 2.0 * kPi * std::sqrt(rho) *
         bessel_i_scaled(static_cast<int>(k) + 0.5, x);
}

double expected_iv_poisson(IntrinsicIndex k, double rho) {
  return ball_intrinsic_volume(k) * poisson_factor(k, rho);
}

SeriesIdentity bessel_series_identity(double k, double z) {
  if (!(k > 0.0) || !(z > 0.0)) {
    throw DomainError("bessel_series_identity: requires k > 0 and z > 0");
  }
  double term = std::exp(std::lgamma(k + 1.0) + (k + 1.0) * std::log(z) -
                         std::lgamma(2.0 * k + 2.0));
  double sum = term;
  double carry = 0.0;
  for (int m = 0; m < 100000; ++m) {
    term *= z * (m + k + 1.0) / ((m + 2.0 * k + 2.0) * (m + 1.0));
    const double t = sum + term;
    carry += (sum - t) + term;
    sum = t;
    if (m > z && term < 1e-18 * sum) break;
  }
  SeriesIdentity out;
  out.lhs = sum + carry;
  out.rhs = std::exp(z) * std::sqrt(kPi * z) * bessel_i_scaled(k + 0.5, 0.5 * z);
  return out;
}

double j_length(long n) {
  if (n < 3) throw DomainError("j_length: requires n >= 3");
  return 32.0 * beta(static_cast<double>(n) - 0.5, 2.5);
}

double expected_edge_length_uniform(long n) {
  if (n < 3) throw DomainError("expected_edge_length_uniform: requires n >= 3");
  const double m = static_cast<double>(n);
  const double choose3 = m * (m - 1.0) * (m - 2.0) / 6.0;
  if (n < 150) return choose3 * (16.0 / (3.0 * kPi)) * j_length(n);
  return std::exp(std::log(choose3) + std::log(512.0 / (3.0 * kPi)) +
                  log_beta(m - 0.5, 2.5));
}

double k_length(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("k_length: requires finite rho > 0");
  }
  return 3.0 / (2.0 * kPi) / (rho * rho) * bessel_i_scaled(2.0, 2.0 * kPi * rho);
}

double expected_edge_length_poisson(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("expected_edge_length_poisson: requires finite rho > 0");
  }
  const double x = 2.0 * kPi * rho;
  return (128.0 / 3.0) * x * bessel_i_scaled(2.0, x);
}

double edge_length_constant() { return 64.0 / (3.0 * std::sqrt(kPi)); }

double expected_min_distance(long n) {
  if (n < 1) throw DomainError("expected_min_distance: requires n >= 1");
  if (n <= kProductLimit) {
    double r = 2.0;
    for (long i = 1; i <= n; ++i) r *= (2.0 * i) / (2.0 * i + 1.0);
    return r;
  }
  return static_cast<double>(n) * 2.0 * std::exp(log_beta(n, 1.5));
}

double expected_min_spherical(long n) {
  if (n < 1) throw DomainError("expected_min_spherical: requires n >= 1");
  if (n <= kProductLimit) {
    double r = kPi;
    for (long i = 1; i <= n; ++i) r *= (2.0 * i - 1.0) / (2.0 * i);
    return r;
  }
  return std::exp(log_beta(n + 0.5, 0.5));
}

double min_distance_moment(long n, int k) {
  if (n < 1 || k < 0) {
    throw DomainError("min_distance_moment: requires n >= 1 and k >= 0");
  }
  const double m = static_cast<double>(n);
  return m * std::exp(k * std::log(2.0) + log_beta(m, 0.5 * k + 1.0));
}

IntrinsicTriple moment_curve(double t) {
  if (!(t >= 3.0) || !std::isfinite(t)) {
    throw DomainError("moment_curve: requires finite t >= 3");
  }
  IntrinsicTriple out;
  out.width = ball_intrinsic_volume(IntrinsicIndex::kWidth) *
              uniform_factor(IntrinsicIndex::kWidth, t);
  out.area = ball_intrinsic_volume(IntrinsicIndex::kArea) *
             uniform_factor(IntrinsicIndex::kArea, t);
  out.volume = ball_intrinsic_volume(IntrinsicIndex::kVolume) *
               uniform_factor(IntrinsicIndex::kVolume, t);
  return out;
}

WidthPrediction predict_from_width(double w) {
  if (!(w > 0.0) || !(w < 2.0)) {
    throw DomainError("predict_from_width: requires 0 < w < 2");
  }
  WidthPrediction out;
  out.n = (2.0 + w) / (2.0 - w);
  const double area_factor = 0.5 * w * (3.0 * w - 2.0) / (6.0 - w);
  out.area = 4.0 * kPi * area_factor;
  out.volume = (4.0 * kPi / 3.0) * area_factor * 2.0 * (w - 1.0) / (4.0 - w);
  return out;
}

}  // namespace sphull
