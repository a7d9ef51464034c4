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

#include "sphull/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sphull {
namespace {

constexpr double kOnSphereTolerance = 1e-9;
constexpr double kDegenerateCapHeight = 1e-12;

}  // namespace

double volume(const ConvexPolytope3& p) {
  const Vec3 c = p.vertex_centroid();
  const auto& v = p.vertices();
  double sum = 0.0;
  for (const Facet& f : p.facets()) {
    const Vec3 a = v[f[0]] - c;
    const Vec3 b = v[f[1]] - c;
    const Vec3 d = v[f[2]] - c;
    sum += dot(a, cross(b, d));
  }
  return std::max(0.0, sum / 6.0);
}

double surface_area(const ConvexPolytope3& p) {
  const auto& v = p.vertices();
  double sum = 0.0;
  for (const Facet& f : p.facets()) {
    sum += 0.5 * norm(cross(v[f[1]] - v[f[0]], v[f[2]] - v[f[0]]));
  }
  return sum;
}

double mean_width(const ConvexPolytope3& p) {
  const auto incident = p.edge_facets();
  const auto& v = p.vertices();
  const auto& edges = p.edges();
  std::vector<Vec3> normals(p.facet_count());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    normals[i] = p.facet_normal(i);
  }
  double sum = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double len = distance(v[edges[e][0]], v[edges[e][1]]);
    const double theta =
        angle_between(normals[incident[e][0]], normals[incident[e][1]]);
    sum += len * theta;
  }
  return sum / (4.0 * std::numbers::pi);
}

double total_edge_length(const ConvexPolytope3& p) {
  const auto& v = p.vertices();
  double sum = 0.0;
  for (const Edge& e : p.edges()) sum += distance(v[e[0]], v[e[1]]);
  return sum;
}

double projection_width(const ConvexPolytope3& p, const UnitVec3& dir) {
  const auto& v = p.vertices();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Facet& f : p.facets()) {
    for (int i : f) {
      const double s = dot(v[i], dir.vec());
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return hi >= lo ? hi - lo : 0.0;
}

FacetCapData facet_cap_data(const ConvexPolytope3& p, std::size_t facet_index) {
  const Facet& f = p.facets().at(facet_index);
  const auto& v = p.vertices();
  return triangle_cap_data(v[f[0]], v[f[1]], v[f[2]]);
}

FacetCapData triangle_cap_data(const Vec3& a, const Vec3& b, const Vec3& c) {
  for (const Vec3* x : {&a, &b, &c}) {
    if (std::abs(norm(*x) - 1.0) > kOnSphereTolerance) {
      throw DomainError("triangle_cap_data: vertex is not on the unit sphere");
    }
  }
  const Vec3 n = cross(b - a, c - a);
  const double twice_area = norm(n);
  if (!(twice_area > 0.0)) {
    throw DegenerateInput("triangle_cap_data: zero area");
  }
  // Signed distance of the facet plane from the center, positive when the
  // center is on the inner side of the outward normal.
  const double offset = dot(n, a) / twice_area;
  if (std::abs(offset) < kDegenerateCapHeight) {
    throw DegenerateCap("triangle_cap_data: plane passes through the center");
  }
  FacetCapData out;
  const double r = distance(a, b) * distance(b, c) * distance(c, a) /
                   (2.0 * twice_area);
  out.circumradius = std::min(r, 1.0);
  out.height = std::sqrt((1.0 - out.circumradius) * (1.0 + out.circumradius));
  out.small_cap_fraction = 0.5 * (1.0 - out.height);
  out.is_small_facet = offset > 0.0;
  out.is_acute = triangle_is_acute(a, b, c);
  return out;
}

bool triangle_is_acute(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(b - a, c - a) > 0.0 && dot(a - b, c - b) > 0.0 &&
         dot(a - c, b - c) > 0.0;
}

NormalizedChain normalized_volume_chain(const PolytopeMetrics& m) {
  return {m.width / 2.0, m.area / (4.0 * std::numbers::pi),
          m.volume / (4.0 * std::numbers::pi / 3.0)};
}

bool chain_is_decreasing(const NormalizedChain& c, double tolerance) {
  return c.width >= c.area * (1.0 - tolerance) &&
         c.area >= c.volume * (1.0 - tolerance);
}

PolytopeMetrics measure(const ConvexPolytope3& p) {
  PolytopeMetrics m;
  m.width = mean_width(p);
  m.area = surface_area(p);
  m.volume = volume(p);
  m.edge_length = total_edge_length(p);
  m.facet_count = p.facet_count();
  m.edge_count = p.edge_count();
  m.vertex_count = p.vertex_count();
  const auto& v = p.vertices();
  for (const Facet& f : p.facets()) {
    if (triangle_is_acute(v[f[0]], v[f[1]], v[f[2]])) ++m.acute_facets;
  }
  return m;
}

PolytopeMetrics measure_point_set(std::span<const Vec3> points) {
  if (points.size() >= 3) return measure(convex_hull(points));
  PolytopeMetrics m;
  m.vertex_count = points.size();
  if (points.size() == 2) {
    // A segment's normal cone along its interior is a full turn.
    m.width = 0.5 * distance(points[0], points[1]);
    if (points[0] == points[1]) m.vertex_count = 1;
  }
  return m;
}

}  // namespace sphull
