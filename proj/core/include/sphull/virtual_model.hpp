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

// The virtual model M_n: an idealized inscribed polytope with 2n - 4
// congruent facets, each the chord triangle of a regular spherical triangle
// of area 4 pi / (2n - 4). Realizable only for n = 4, 6 and 12 (tetrahedron,
// octahedron, icosahedron), but defined for every n >= 4.

#pragma once

#include <vector>

namespace sphull {

struct VirtualModel {
  long n = 0;
  double spherical_area = 0.0;   // a_n = 4 pi / (2n - 4)
  double spherical_angle = 0.0;  // alpha_n = (a_n + pi) / 3
  double edge = 0.0;             // L_n, Euclidean edge length
  double facet_area = 0.0;       // A_n
  double cone_volume = 0.0;      // V_n, facet area times height over 3
  double normal_angle = 0.0;     // theta_n, angle between adjacent normals
};

// Throws DomainError for n < 4.
VirtualModel virtual_model(long n);

struct ModelQuantities {
  double length = 0.0;  // (3n - 6) L_n
  double width = 0.0;   // (3n - 6) L_n theta_n / (4 pi)
  double area = 0.0;    // (2n - 4) A_n
  double volume = 0.0;  // (2n - 4) V_n
};

ModelQuantities model_quantities(long n);

// 1 - value / ball_value.
double deficiency(double value, double ball_value);

struct DeficiencyRatios {
  double width = 0.0;   // 18 sqrt(3) / (5 pi)
  double area = 0.0;    // 18 sqrt(3) / (5 pi)
  double volume = 0.0;  // 4 sqrt(3) / pi
};

// Limits of E[deficiency(X_n)] / deficiency(M_n) as n grows.
DeficiencyRatios deficiency_ratio_limits();

// 6 sqrt(2 pi) / 3^(1/4), the limit of Length(M_n) / sqrt(n).
double model_length_constant();

struct DeficiencyRow {
  long n = 0;
  double expected_width = 0.0;  // deficiencies of the random polytope
  double model_width = 0.0;     // and of the model
  double width_ratio = 0.0;
  double expected_area = 0.0;
  double model_area = 0.0;
  double area_ratio = 0.0;
  double expected_volume = 0.0;
  double model_volume = 0.0;
  double volume_ratio = 0.0;
  double expected_length_per_sqrt_n = 0.0;
  double model_length_per_sqrt_n = 0.0;
};

// Analytic comparison of X_n with M_n. Requires n >= 4.
DeficiencyRow deficiency_row(long n);

}  // namespace sphull
