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

// Special functions used by the closed-form expectations. All throw
// DomainError outside their stated domains.

#pragma once

namespace sphull {

// log Gamma(x) for x > 0.
double lgamma(double x);

// Euler Beta function B(a, b) for a, b > 0, and its logarithm.
double beta(double a, double b);
double log_beta(double a, double b);

// Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.
// Ascending series up to x = 200, large-argument expansion beyond (where the
// result overflows to infinity once x exceeds ~710).
double bessel_i(double nu, double x);

// exp(-x) * I_nu(x), finite for every x >= 0.
double bessel_i_scaled(double nu, double x);

// Carlson's symmetric elliptic integrals by the duplication theorem.
// R_F needs x, y, z >= 0 with at most one zero; R_D needs x, y >= 0 with at
// most one zero and z > 0.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

// Legendre incomplete integrals of the first and second kind with amplitude
// phi (radians) and modulus k, k^2 sin^2(phi) <= 1.
double incomplete_elliptic_f(double phi, double k);
double incomplete_elliptic_e(double phi, double k);

// Complete integrals K(k) = F(pi/2, k) and E(k) = E(pi/2, k).
double complete_elliptic_k(double k);
double complete_elliptic_e(double k);

}  // namespace sphull
