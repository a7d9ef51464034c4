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

#include <cmath>
#include <string>

#include "sphull/errors.hpp"

namespace sphull {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr double norm_squared(const Vec3& a) { return dot(a, a); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Angle between two nonzero vectors in [0, pi], via atan2 so that nearly
// parallel and nearly antiparallel inputs keep full precision.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

// A point of the unit sphere. The norm is within kTolerance of one.
class UnitVec3 {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitVec3() : v_{0.0, 0.0, 1.0} {}

  // Throws DomainError unless |v| is within kTolerance of one.
  explicit UnitVec3(const Vec3& v) : v_(v) {
    if (!is_finite(v) || std::abs(norm(v) - 1.0) > kTolerance) {
      throw DomainError("UnitVec3: vector is not of unit length");
    }
  }

  UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

  // Rescales a nonzero finite vector onto the sphere.
  static UnitVec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw DomainError("UnitVec3::normalized: zero or non-finite vector");
    }
    return UnitVec3(v / n, Unchecked{});
  }

  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }  // NOLINT(google-explicit-constructor)

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVec3 operator-() const { return UnitVec3(-v_, Unchecked{}); }

  friend bool operator==(const UnitVec3&, const UnitVec3&) = default;

 private:
  struct Unchecked {};
  UnitVec3(const Vec3& v, Unchecked) : v_(v) {}

  Vec3 v_;
};

}  // namespace sphull
