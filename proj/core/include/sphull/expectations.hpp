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

// Exact expectations for random polytopes inscribed in the unit sphere.
//
// Intrinsic volumes are indexed V_1 = mean width, V_2 = surface area,
// V_3 = volume, with unit-ball values 2, 4 pi and 4 pi / 3. For n uniform
// points
//
//   E[V_k(X_n)] = V_k(B) * Gamma(n) Gamma(n + 1) / (Gamma(n - k) Gamma(n + k + 1))
//               = V_k(B) * prod_{j=1..k} (n - j) / (n + j),
//
// where three points count as a double-covered triangle. Everything here is a
// pure function.

#pragma once

#include <utility>

namespace sphull {

enum class IntrinsicIndex : int { kWidth = 1, kArea = 2, kVolume = 3 };

// Throws DomainError unless k is 1, 2 or 3.
IntrinsicIndex intrinsic_index(int k);

// V_k of the unit ball: 2, 4 pi, 4 pi / 3.
double ball_intrinsic_volume(IntrinsicIndex k);

// prod_{j=1..k} (t - j) / (t + j); zero once t <= k for integer t.
double uniform_factor(IntrinsicIndex k, double t);

// Requires n >= 1; zero when n <= k.
double expected_iv_uniform(IntrinsicIndex k, long n);

// Hull of n uniform points and their antipodes. Requires n >= 3.
double expected_iv_symmetric(IntrinsicIndex k, long n);

// 2 pi sqrt(rho) exp(-2 pi rho) I_{k + 1/2}(2 pi rho), the Poisson-process
// counterpart of uniform_factor. Tends to one as rho grows.
double poisson_factor(IntrinsicIndex k, double rho);

// Poisson process of intensity rho > 0 on the sphere.
double expected_iv_poisson(IntrinsicIndex k, double rho);

struct SeriesIdentity {
  double lhs = 0.0;  // sum_m Gamma(m+k+1) z^(m+k+1) / (Gamma(m+2k+2) m!)
  double rhs = 0.0;  // exp(z/2) sqrt(pi z) I_{k+1/2}(z/2)
};

// Both sides of the Bessel representation of the Poisson mixture series, for
// k > 0 and z > 0. The left side is summed term by term.
SeriesIdentity bessel_series_identity(double k, double z);

// C(n, 3) * (512 / (3 pi)) * B(n - 1/2, 5/2). Requires n >= 3.
double expected_edge_length_uniform(long n);

// (128/3) sqrt(rho) * 2 pi sqrt(rho) exp(-2 pi rho) I_2(2 pi rho).
double expected_edge_length_poisson(double rho);

// 64 / (3 sqrt(pi)), the limit of E[Length(X_n)] / sqrt(n).
double edge_length_constant();

// J(n) = 32 B(n - 1/2, 5/2), n >= 3.
double j_length(long n);

// K(rho) = (3 / (2 pi)) rho^-2 exp(-2 pi rho) I_2(2 pi rho), rho > 0.
double k_length(double rho);

// Minimum distance from a fixed point of the sphere to n >= 1 uniform points.
// Euclidean: 2 (2n)!! / (2n + 1)!!. Great-circle: B(n + 1/2, 1/2).
// k-th moment of the Euclidean distance: n 2^k B(n, k/2 + 1).
double expected_min_distance(long n);
double expected_min_spherical(long n);
double min_distance_moment(long n, int k);

struct IntrinsicTriple {
  double width = 0.0;
  double area = 0.0;
  double volume = 0.0;
};

// The curve t -> (E[V_1], E[V_2], E[V_3]) at real t >= 3; hits the expected
// triples at integer t.
IntrinsicTriple moment_curve(double t);

struct WidthPrediction {
  double n = 0.0;       // (2 + w) / (2 - w)
  double area = 0.0;    // 4 pi (w/2) (3w - 2) / (6 - w)
  double volume = 0.0;  // (4 pi / 3) (w/2) (3w - 2)/(6 - w) 2 (w - 1)/(4 - w)
};

// Inverts the width formula and composes it with the area and volume
// formulas. Requires 0 < w < 2.
WidthPrediction predict_from_width(double w);

}  // namespace sphull
