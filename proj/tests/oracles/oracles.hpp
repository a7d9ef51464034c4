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

// Independent reference computations for the tests. Nothing here calls into
// the library's geometry or special-function code.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <span>

#include "sphull/vec3.hpp"

namespace sphull::oracle {

using TriangleSet = std::set<std::array<int, 3>>;

// Facets of conv(points) found by testing every triple against every other
// point in exact rational arithmetic. O(n^4); each facet is reported as its
// sorted vertex indices. Assumes general position.
TriangleSet brute_force_facets(std::span<const Vec3> points);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Mean of (max - min) of <v, u> over `directions` random unit vectors u drawn
// as normalized Gaussian triples.
Estimate projection_width_mc(std::span<const Vec3> vertices,
                             std::size_t directions, std::uint64_t seed);

// Adaptive quadrature of the length integrals, on the original variable t
// (tanh-sinh, which tolerates the endpoint singularity) and after the
// substitution t = 2s - s^2 (Gauss-Kronrod on a smooth integrand).
double j_length_t(long n);
double j_length_s(long n);
double k_length_t(double rho);
double k_length_s(double rho);

// Legendre integrals by quadrature of their defining integrands.
double elliptic_f(double phi, double k);
double elliptic_e(double phi, double k);

// Surface area of the ellipsoid with half-axes p, q, r as a double integral
// over the parameter sphere, and its mean width as 2 * mean |diag(p,q,r) u|.
double ellipsoid_area(double p, double q, double r);
double ellipsoid_width(double p, double q, double r);

// sum_n f(n) e^(-mean) mean^n / n!, truncated once the remaining Poisson mass
// is below 1e-16.
double poisson_mixture(const std::function<double(long)>& f, double mean);

// I_{1/2}(x) and I_{3/2}(x) from their elementary closed forms.
double bessel_i_half(double x);
double bessel_i_three_halves(double x);

}  // namespace sphull::oracle
