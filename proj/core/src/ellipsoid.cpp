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

#include "sphull/ellipsoid.hpp"

#include <cmath>
#include <numbers>

#include "sphull/errors.hpp"
#include "sphull/special.hpp"

namespace sphull {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Ellipsoid::Ellipsoid(double p, double q, double r) : p_(p), q_(q), r_(r) {
  if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r) ||
      !(p >= q && q >= r && r > 0.0)) {
    throw DomainError("Ellipsoid: half-axes must satisfy p >= q >= r > 0");
  }
}

double ellipsoid_volume(const Ellipsoid& e) {
  return 4.0 * kPi / 3.0 * e.p() * e.q() * e.r();
}

double ellipsoid_area(const Ellipsoid& e) {
  const double p = e.p(), q = e.q(), r = e.r();
  if (p == r) return 4.0 * kPi * p * p;
  // Eccentricity of the p-r section.
  const double ecc = std::sqrt((1.0 - r / p) * (1.0 + r / p));
  if (p == q) {
    return 2.0 * kPi * p * p * (1.0 + (r / p) * (r / p) / ecc * std::atanh(ecc));
  }
  if (q == r) {
    return 2.0 * kPi * r * r * (1.0 + p / (r * ecc) * std::asin(ecc));
  }
  const double phi = std::acos(r / p);
  const double k =
      (p / q) * std::sqrt((q - r) * (q + r) / ((p - r) * (p + r)));
  const double s = std::sin(phi);
  const double c = r / p;
  return 2.0 * kPi * r * r +
         2.0 * kPi * p * q / s *
             (incomplete_elliptic_e(phi, k) * s * s +
              incomplete_elliptic_f(phi, k) * c * c);
}

double ellipsoid_width(const Ellipsoid& e) {
  return e.p() * e.q() * e.r() / (2.0 * kPi) * ellipsoid_area(e.dual());
}

double ellipsoid_intrinsic_volume(IntrinsicIndex k, const Ellipsoid& e) {
  switch (k) {
    case IntrinsicIndex::kWidth:
      return ellipsoid_width(e);
    case IntrinsicIndex::kArea:
      return ellipsoid_area(e);
    case IntrinsicIndex::kVolume:
      return ellipsoid_volume(e);
  }
  throw DomainError("unknown intrinsic volume index");
}

double expected_iv_ellipsoid(IntrinsicIndex k, long n, const Ellipsoid& e) {
  if (n < 1) throw DomainError("expected_iv_ellipsoid: requires n >= 1");
  if (n <= static_cast<long>(k)) return 0.0;
  return uniform_factor(k, static_cast<double>(n)) *
         ellipsoid_intrinsic_volume(k, e);
}

double expected_edge_length_ellipsoid_asymptotic(long n, const Ellipsoid& e) {
  if (n < 1) throw DomainError("expected_edge_length_ellipsoid_asymptotic: n >= 1");
  return ellipsoid_width(e) * (32.0 / (3.0 * std::sqrt(kPi))) *
         std::sqrt(static_cast<double>(n));
}

double expected_edge_length_ellipsoid(long n, const Ellipsoid& e) {
  return 0.5 * ellipsoid_width(e) * expected_edge_length_uniform(n);
}

}  // namespace sphull
