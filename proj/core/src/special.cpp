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

#include "sphull/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sphull/errors.hpp"

namespace sphull {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// lgamma(x) - ((x - 1/2) log x - x + log(2 pi) / 2), for x >= 10.
double stirling_correction(double x) {
  const double r = 1.0 / (x * x);
  return (1.0 / 12.0 -
          r * (1.0 / 360.0 - r * (1.0 / 1260.0 - r * (1.0 / 1680.0)))) / x;
}

// Crossover between the ascending series and the large-argument expansion.
constexpr double kBesselSeriesLimit = 200.0;

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// sum_m (x/2)^(2m + nu) / (m! Gamma(m + nu + 1)), all terms positive.
double bessel_i_series(double nu, double x) {
  const double half = 0.5 * x;
  const double quarter_sq = half * half;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  CompensatedSum sum;
  sum.add(term);
  for (int m = 1; m < 2000; ++m) {
    term *= quarter_sq / (static_cast<double>(m) * (m + nu));
    sum.add(term);
    if (term < 1e-18 * sum.value()) break;
  }
  return sum.value();
}

// exp(-x) I_nu(x) ~ (2 pi x)^(-1/2) sum_k (-1)^k a_k(nu) / x^k, with
// a_k = prod_{j<=k} (4 nu^2 - (2j - 1)^2) / (k! 8^k). Terminates for
// half-integer nu; otherwise summed until the terms stop shrinking.
double bessel_i_scaled_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  CompensatedSum sum;
  sum.add(term);
  double previous = kInf;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    if (term == 0.0) break;
    if (std::abs(term) >= previous) break;
    sum.add(term);
    previous = std::abs(term);
    if (previous < 1e-17 * std::abs(sum.value())) break;
  }
  return sum.value() / std::sqrt(2.0 * std::numbers::pi * x);
}

void check_bessel_args(double nu, double x) {
  if (!(nu >= 0.0) || !(x >= 0.0) || std::isnan(nu) || std::isnan(x)) {
    throw DomainError("bessel_i: requires nu >= 0 and x >= 0");
  }
}

constexpr double kCarlsonTolerance = 1e-3;

}  // namespace

double lgamma(double x) {
  if (!(x > 0.0)) throw DomainError("lgamma: requires x > 0");
  return std::lgamma(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: requires a, b > 0");
  const double big = std::max(a, b);
  const double small = std::min(a, b);
  if (big < 10.0) return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  // lgamma(big) - lgamma(big + small) by Stirling, with the large terms
  // cancelled analytically.
  const double sum = big + small;
  const double diff = -(big - 0.5) * std::log1p(small / big) -
                      small * std::log(sum) + small +
                      stirling_correction(big) - stirling_correction(sum);
  return std::lgamma(small) + diff;
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: requires a, b > 0");
  if (a + b < 150.0) {
    return std::tgamma(a) / std::tgamma(a + b) * std::tgamma(b);
  }
  return std::exp(log_beta(a, b));
}

double bessel_i(double nu, double x) {
  check_bessel_args(nu, x);
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= kBesselSeriesLimit) return bessel_i_series(nu, x);
  return std::exp(x) * bessel_i_scaled_asymptotic(nu, x);
}

double bessel_i_scaled(double nu, double x) {
  check_bessel_args(nu, x);
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= kBesselSeriesLimit) return std::exp(-x) * bessel_i_series(nu, x);
  return bessel_i_scaled_asymptotic(nu, x);
}

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || std::isnan(x + y + z)) {
    throw DomainError("carlson_rf: arguments must be nonnegative");
  }
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) return kInf;
  for (int iter = 0; iter < 100; ++iter) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    const double mean = (x + y + z) / 3.0;
    const double dx = (mean - x) / mean;
    const double dy = (mean - y) / mean;
    const double dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kCarlsonTolerance) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
             std::sqrt(mean);
    }
  }
  throw DomainError("carlson_rf: duplication did not converge");
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || !(z > 0.0) || std::isnan(x + y + z)) {
    throw DomainError("carlson_rd: requires x, y >= 0 and z > 0");
  }
  if (x == 0.0 && y == 0.0) return kInf;
  double sum = 0.0;
  double scale = 1.0;
  for (int iter = 0; iter < 100; ++iter) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    sum += scale / (sz * (z + lambda));
    scale *= 0.25;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    const double mean = 0.2 * (x + y + 3.0 * z);
    const double dx = (mean - x) / mean;
    const double dy = (mean - y) / mean;
    const double dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kCarlsonTolerance) {
      const double ea = dx * dy;
      const double eb = dz * dz;
      const double ec = ea - eb;
      const double ed = ea - 6.0 * eb;
      const double ee = ed + ec + ec;
      const double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0,
                   c4 = 3.0 / 26.0, c5 = 0.25 * c3, c6 = 1.5 * c4;
      const double series =
          1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
          dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea));
      return 3.0 * sum + scale * series / (mean * std::sqrt(mean));
    }
  }
  throw DomainError("carlson_rd: duplication did not converge");
}

double complete_elliptic_k(double k) {
  if (!(std::abs(k) <= 1.0)) throw DomainError("complete_elliptic_k: |k| > 1");
  if (std::abs(k) == 1.0) return kInf;
  return carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0);
}

double complete_elliptic_e(double k) {
  if (!(std::abs(k) <= 1.0)) throw DomainError("complete_elliptic_e: |k| > 1");
  if (std::abs(k) == 1.0) return 1.0;
  const double kc2 = (1.0 - k) * (1.0 + k);
  return carlson_rf(0.0, kc2, 1.0) - k * k * carlson_rd(0.0, kc2, 1.0) / 3.0;
}

namespace {

// Splits phi = m * pi + phi0 with |phi0| <= pi / 2.
double reduce_amplitude(double phi, double& periods) {
  periods = std::round(phi / std::numbers::pi);
  return phi - periods * std::numbers::pi;
}

void check_elliptic_args(double phi, double k) {
  if (!std::isfinite(phi) || !std::isfinite(k)) {
    throw DomainError("incomplete elliptic integral: non-finite argument");
  }
}

}  // namespace

double incomplete_elliptic_f(double phi, double k) {
  check_elliptic_args(phi, k);
  double periods = 0.0;
  const double p = reduce_amplitude(phi, periods);
  const double s = std::sin(p);
  const double c = std::cos(p);
  const double delta2 = 1.0 - k * k * s * s;
  if (delta2 < 0.0 && periods == 0.0) {
    throw DomainError("incomplete_elliptic_f: k^2 sin^2(phi) > 1");
  }
  double value = 0.0;
  if (s != 0.0) {
    if (c == 0.0 && delta2 <= 0.0) {
      value = std::copysign(kInf, s);
    } else {
      value = s * carlson_rf(c * c, std::max(delta2, 0.0), 1.0);
    }
  }
  if (periods != 0.0) value += 2.0 * periods * complete_elliptic_k(k);
  return value;
}

double incomplete_elliptic_e(double phi, double k) {
  check_elliptic_args(phi, k);
  double periods = 0.0;
  const double p = reduce_amplitude(phi, periods);
  const double s = std::sin(p);
  const double c = std::cos(p);
  const double delta2 = 1.0 - k * k * s * s;
  if (delta2 < 0.0 && periods == 0.0) {
    throw DomainError("incomplete_elliptic_e: k^2 sin^2(phi) > 1");
  }
  double value = 0.0;
  if (s != 0.0) {
    if (std::abs(k) == 1.0) {
      value = s;  // E(phi, 1) = sin(phi) on |phi| <= pi/2
    } else {
      const double d2 = std::max(delta2, 0.0);
      value = s * carlson_rf(c * c, d2, 1.0) -
              k * k * s * s * s * carlson_rd(c * c, d2, 1.0) / 3.0;
    }
  }
  if (periods != 0.0) value += 2.0 * periods * complete_elliptic_e(k);
  return value;
}

}  // namespace sphull
