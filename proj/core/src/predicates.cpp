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

#include "predicates.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>

namespace sphull::detail {
namespace {

// Static error bound of the double-precision orient3d evaluation below
// (Shewchuk's errboundA), relative to the permanent of the same terms.
constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kOrientErrBound = (7.0 + 56.0 * kEpsilon) * kEpsilon;

}  // namespace

int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const mpq_class ax(a.x), ay(a.y), az(a.z);
  const mpq_class bx = mpq_class(b.x) - ax;
  const mpq_class by = mpq_class(b.y) - ay;
  const mpq_class bz = mpq_class(b.z) - az;
  const mpq_class cx = mpq_class(c.x) - ax;
  const mpq_class cy = mpq_class(c.y) - ay;
  const mpq_class cz = mpq_class(c.z) - az;
  const mpq_class dx = mpq_class(d.x) - ax;
  const mpq_class dy = mpq_class(d.y) - ay;
  const mpq_class dz = mpq_class(d.z) - az;
  const mpq_class det = bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) +
                        bz * (cx * dy - cy * dx);
  return sgn(det);
}

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  // Differences are taken relative to d, as in Shewchuk's formulation, which
  // yields the negated orientation of our convention.
  const double adx = a.x - d.x, ady = a.y - d.y, adz = a.z - d.z;
  const double bdx = b.x - d.x, bdy = b.y - d.y, bdz = b.z - d.z;
  const double cdx = c.x - d.x, cdy = c.y - d.y, cdz = c.z - d.z;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;

  const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) +
                     cdz * (adxbdy - bdxady);
  const double permanent =
      (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz) +
      (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz) +
      (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
  const double bound = kOrientErrBound * permanent;
  if (det > bound) return -1;
  if (-det > bound) return 1;
  return orient3d_exact(a, b, c, d);
}

}  // namespace sphull::detail
