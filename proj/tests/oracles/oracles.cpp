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

#include "oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <gmpxx.h>
#include <numbers>
#include <random>
#include <vector>

namespace sphull::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

int exact_orientation(const Vec3& a, const Vec3& b, const Vec3& c,
                      const Vec3& d) {
  const mpq_class bx = mpq_class(b.x) - a.x, by = mpq_class(b.y) - a.y,
                  bz = mpq_class(b.z) - a.z;
  const mpq_class cx = mpq_class(c.x) - a.x, cy = mpq_class(c.y) - a.y,
                  cz = mpq_class(c.z) - a.z;
  const mpq_class dx = mpq_class(d.x) - a.x, dy = mpq_class(d.y) - a.y,
                  dz = mpq_class(d.z) - a.z;
  const mpq_class det = bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) +
                        bz * (cx * dy - cy * dx);
  return sgn(det);
}

template <class F>
double gk(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 20, 1e-14);
}

}  // namespace

TriangleSet brute_force_facets(std::span<const Vec3> points) {
  const int n = static_cast<int>(points.size());
  TriangleSet out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        int side = 0;
        bool facet = true;
        for (int l = 0; l < n && facet; ++l) {
          if (l == i || l == j || l == k) continue;
          const int s =
              exact_orientation(points[i], points[j], points[k], points[l]);
          if (s == 0 || (side != 0 && s != side)) facet = false;
          side = s;
        }
        if (facet) out.insert({i, j, k});
      }
    }
  }
  return out;
}

Estimate projection_width_mc(std::span<const Vec3> vertices,
                             std::size_t directions, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < directions; ++i) {
    double x = normal(engine), y = normal(engine), z = normal(engine);
    const double len = std::sqrt(x * x + y * y + z * z);
    x /= len;
    y /= len;
    z /= len;
    double lo = INFINITY, hi = -INFINITY;
    for (const Vec3& v : vertices) {
      const double s = v.x * x + v.y * y + v.z * z;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    sum += hi - lo;
    sum_sq += (hi - lo) * (hi - lo);
  }
  const double m = static_cast<double>(directions);
  const double mean = sum / m;
  const double var = (sum_sq - m * mean * mean) / (m - 1.0);
  return {mean, std::sqrt(std::max(var, 0.0) / m)};
}

double j_length_t(long n) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double e = static_cast<double>(n - 3);
  auto f = [e](double t, double tc) {
    const double one_minus_t = tc > 0.0 ? tc : 1.0 - t;
    const double root = std::sqrt(one_minus_t);
    return std::pow(t, 1.5) / root *
           (std::pow(0.5 * (1.0 + root), e) + std::pow(0.5 * (1.0 - root), e));
  };
  return ts.integrate(f, 0.0, 1.0, 1e-14);
}

double j_length_s(long n) {
  const double e = static_cast<double>(n - 3);
  return 2.0 * gk(
                   [e](double s) {
                     return std::pow(2.0 * s - s * s, 1.5) *
                            (std::pow(0.5 * (2.0 - s), e) + std::pow(0.5 * s, e));
                   },
                   0.0, 1.0);
}

double k_length_t(double rho) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double c = 2.0 * kPi * rho;
  auto f = [c](double t, double tc) {
    const double one_minus_t = tc > 0.0 ? tc : 1.0 - t;
    const double root = std::sqrt(one_minus_t);
    return std::pow(t, 1.5) / root *
           (std::exp(-c * (1.0 + root)) + std::exp(-c * (1.0 - root)));
  };
  return ts.integrate(f, 0.0, 1.0, 1e-14);
}

double k_length_s(double rho) {
  const double c = 2.0 * kPi * rho;
  return 2.0 * gk(
                   [c](double s) {
                     return std::pow(2.0 * s - s * s, 1.5) *
                            (std::exp(-c * (2.0 - s)) + std::exp(-c * s));
                   },
                   0.0, 1.0);
}

double elliptic_f(double phi, double k) {
  return gk(
      [k](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
      },
      0.0, phi);
}

double elliptic_e(double phi, double k) {
  return gk(
      [k](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - k * k * s * s);
      },
      0.0, phi);
}

double ellipsoid_area(double p, double q, double r) {
  // x = (p sin t cos f, q sin t sin f, r cos t); eight symmetric octants.
  auto inner = [&](double t) {
    const double st = std::sin(t), ct = std::cos(t);
    return gk(
        [&](double f) {
          const double cf = std::cos(f), sf = std::sin(f);
          const double a = q * r * st * cf, b = p * r * st * sf, c = p * q * ct;
          return st * std::sqrt(a * a + b * b + c * c);
        },
        0.0, 0.5 * kPi);
  };
  return 8.0 * gk(inner, 0.0, 0.5 * kPi);
}

double ellipsoid_width(double p, double q, double r) {
  auto inner = [&](double t) {
    const double st = std::sin(t), ct = std::cos(t);
    return gk(
        [&](double f) {
          const double x = p * st * std::cos(f), y = q * st * std::sin(f),
                       z = r * ct;
          return st * std::sqrt(x * x + y * y + z * z);
        },
        0.0, 0.5 * kPi);
  };
  return 2.0 * 8.0 * gk(inner, 0.0, 0.5 * kPi) / (4.0 * kPi);
}

double poisson_mixture(const std::function<double(long)>& f, double mean) {
  double weight = std::exp(-mean);
  double sum = 0.0;
  for (long n = 0;; ++n) {
    sum += f(n) * weight;
    weight *= mean / static_cast<double>(n + 1);
    if (static_cast<double>(n) > mean && weight < 1e-16 * 1e-3) break;
  }
  return sum;
}

double bessel_i_half(double x) {
  return std::sqrt(2.0 / (kPi * x)) * std::sinh(x);
}

double bessel_i_three_halves(double x) {
  return std::sqrt(2.0 / (kPi * x)) * (std::cosh(x) - std::sinh(x) / x);
}

}  // namespace sphull::oracle
