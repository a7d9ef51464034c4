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

#include "sphull/virtual_model.hpp"

#include <cmath>
#include <numbers>

#include "sphull/errors.hpp"
#include "sphull/expectations.hpp"

namespace sphull {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

VirtualModel virtual_model(long n) {
  if (n < 4) throw DomainError("virtual_model: requires n >= 4");
  VirtualModel m;
  m.n = n;
  const double facets = 2.0 * static_cast<double>(n) - 4.0;
  m.spherical_area = 4.0 * kPi / facets;
  m.spherical_angle = (m.spherical_area + kPi) / 3.0;

  // The spherical edge s obeys cos s = cos(alpha) / (1 - cos(alpha)), so
  // L^2 = 2 (1 - cos s) = 2 (1 - 2 cos alpha) / (1 - cos alpha). With
  // alpha = pi/3 + eps the numerator is 2 sin^2(eps/2) + sqrt(3) sin(eps),
  // which keeps full precision as eps -> 0.
  const double eps = m.spherical_area / 3.0;
  const double half = std::sin(0.5 * eps);
  const double numer = 2.0 * half * half + kSqrt3 * std::sin(eps);
  const double cos_alpha = std::cos(m.spherical_angle);
  const double l2 = 2.0 * numer / (1.0 - cos_alpha);
  m.edge = std::sqrt(l2);

  // Equilateral chord triangle: circumradius^2 = L^2 / 3, plane at height h.
  const double height = std::sqrt(1.0 - l2 / 3.0);
  m.facet_area = 0.25 * kSqrt3 * l2;
  m.cone_volume = m.facet_area * height / 3.0;
  m.normal_angle = 2.0 * std::atan2(m.edge / std::sqrt(12.0), height);
  return m;
}

ModelQuantities model_quantities(long n) {
  const VirtualModel m = virtual_model(n);
  const double edges = 3.0 * static_cast<double>(n) - 6.0;
  const double facets = 2.0 * static_cast<double>(n) - 4.0;
  ModelQuantities q;
  q.length = edges * m.edge;
  q.width = edges * m.edge * m.normal_angle / (4.0 * kPi);
  q.area = facets * m.facet_area;
  q.volume = facets * m.cone_volume;
  return q;
}

double deficiency(double value, double ball_value) {
  if (!(ball_value > 0.0)) throw DomainError("deficiency: ball value must be > 0");
  return 1.0 - value / ball_value;
}

DeficiencyRatios deficiency_ratio_limits() {
  DeficiencyRatios r;
  r.width = 18.0 * kSqrt3 / (5.0 * kPi);
  r.area = r.width;
  r.volume = 4.0 * kSqrt3 / kPi;
  return r;
}

double model_length_constant() {
  return 6.0 * std::sqrt(2.0 * kPi) / std::pow(3.0, 0.25);
}

DeficiencyRow deficiency_row(long n) {
  if (n < 4) throw DomainError("deficiency_row: requires n >= 4");
  const double t = static_cast<double>(n);
  const ModelQuantities model = model_quantities(n);
  DeficiencyRow row;
  row.n = n;

  // 1 - prod (n - j)/(n + j) without cancellation.
  row.expected_width = 2.0 / (t + 1.0);
  row.expected_area = 6.0 * t / ((t + 1.0) * (t + 2.0));
  double log_factor = 0.0;
  for (int j = 1; j <= 3; ++j) log_factor += std::log1p(-2.0 * j / (t + j));
  row.expected_volume = -std::expm1(log_factor);

  row.model_width =
      deficiency(model.width, ball_intrinsic_volume(IntrinsicIndex::kWidth));
  row.model_area =
      deficiency(model.area, ball_intrinsic_volume(IntrinsicIndex::kArea));
  row.model_volume =
      deficiency(model.volume, ball_intrinsic_volume(IntrinsicIndex::kVolume));

  row.width_ratio = row.expected_width / row.model_width;
  row.area_ratio = row.expected_area / row.model_area;
  row.volume_ratio = row.expected_volume / row.model_volume;

  const double root = std::sqrt(t);
  row.expected_length_per_sqrt_n = expected_edge_length_uniform(n) / root;
  row.model_length_per_sqrt_n = model.length / root;
  return row;
}

}  // namespace sphull
