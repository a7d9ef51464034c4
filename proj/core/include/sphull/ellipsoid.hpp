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

#include "sphull/expectations.hpp"
#include "sphull/vec3.hpp"

namespace sphull {

// Axis-aligned ellipsoid with half-axes p >= q >= r > 0; the image of the
// unit ball under diag(p, q, r).
class Ellipsoid {
 public:
  // Throws DomainError unless p >= q >= r > 0 and all are finite.
  Ellipsoid(double p, double q, double r);

  static Ellipsoid unit_ball() { return Ellipsoid(1.0, 1.0, 1.0); }

  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }

  // Half-axes 1/r >= 1/q >= 1/p.
  Ellipsoid dual() const { return Ellipsoid(1.0 / r_, 1.0 / q_, 1.0 / p_); }

  Vec3 map(const Vec3& x) const { return {p_ * x.x, q_ * x.y, r_ * x.z}; }
  Vec3 unmap(const Vec3& y) const { return {y.x / p_, y.y / q_, y.z / r_}; }

  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;

 private:
  double p_;
  double q_;
  double r_;
};

// (4 pi / 3) p q r.
double ellipsoid_volume(const Ellipsoid& e);

// Surface area through Legendre's incomplete elliptic integrals, with the
// spheroid and sphere cases evaluated by their own closed forms.
double ellipsoid_area(const Ellipsoid& e);

// Mean width, from the area of the dual ellipsoid: (pqr / 2 pi) Area(dual).
double ellipsoid_width(const Ellipsoid& e);

// k-th intrinsic volume of the ellipsoid (width, area, volume).
double ellipsoid_intrinsic_volume(IntrinsicIndex k, const Ellipsoid& e);

// Expected k-th intrinsic volume of the hull of n homeoid-distributed points:
// the sphere factors times the ellipsoid's own value.
double expected_iv_ellipsoid(IntrinsicIndex k, long n, const Ellipsoid& e);

// Width(E) * (32 / (3 sqrt(pi))) * sqrt(n), the leading-order edge length.
double expected_edge_length_ellipsoid_asymptotic(long n, const Ellipsoid& e);

// Width(E) / 2 times the expected edge length on the sphere. Exact for every
// n >= 3, since edge directions of the spherical hull are uniform and the
// average stretch |Lu| over unit u is half the mean width.
double expected_edge_length_ellipsoid(long n, const Ellipsoid& e);

}  // namespace sphull
