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

#include <cstddef>
#include <span>

#include "sphull/hull.hpp"
#include "sphull/vec3.hpp"

namespace sphull {

struct PolytopeMetrics {
  double width = 0.0;
  double area = 0.0;
  double volume = 0.0;
  double edge_length = 0.0;
  std::size_t facet_count = 0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  std::size_t acute_facets = 0;
};

// Geometry of the plane through one facet relative to the unit sphere.
struct FacetCapData {
  double circumradius = 0.0;        // r, Euclidean circumradius of the facet
  double height = 0.0;              // h = sqrt(1 - r^2)
  double small_cap_fraction = 0.0;  // (1 - h) / 2, area fraction of small cap
  bool is_small_facet = false;      // the small circumcap is the empty one
  bool is_acute = false;
};

struct NormalizedChain {
  double width = 0.0;   // width / 2
  double area = 0.0;    // area / (4 pi)
  double volume = 0.0;  // volume / (4 pi / 3)
};

// Sum of signed tetrahedra from the vertex centroid to every facet.
double volume(const ConvexPolytope3& p);

// Sum of facet areas; a double-covered triangle counts both sides.
double surface_area(const ConvexPolytope3& p);

// (1 / 4pi) * sum over edges of length times the angle between the outward
// normals of the two incident facets. Throws NonManifoldEdge.
double mean_width(const ConvexPolytope3& p);

double total_edge_length(const ConvexPolytope3& p);

// max - min of <v, dir> over the vertices.
double projection_width(const ConvexPolytope3& p, const UnitVec3& dir);

// Requires the facet's vertices on the unit sphere within 1e-9. Throws
// DegenerateCap when the facet plane passes through the center, DomainError
// when the vertices are off the sphere.
FacetCapData facet_cap_data(const ConvexPolytope3& p, std::size_t facet_index);

// The same for a bare triangle oriented by (b - a) x (c - a); is_small_facet
// then says that normal points away from the center.
FacetCapData triangle_cap_data(const Vec3& a, const Vec3& b, const Vec3& c);

// All three angles strictly below pi/2; a right angle is not acute.
bool triangle_is_acute(const Vec3& a, const Vec3& b, const Vec3& c);

NormalizedChain normalized_volume_chain(const PolytopeMetrics& m);

// True when width >= area >= volume after normalization, allowing a relative
// slack of `tolerance` for rounding.
bool chain_is_decreasing(const NormalizedChain& c, double tolerance = 1e-12);

PolytopeMetrics measure(const ConvexPolytope3& p);

// Metrics of conv(points) for any number of points, including the flat cases
// a Poisson process produces: no point or one point measure zero, and a
// segment of length L has mean width L / 2 and no facets (hence zero total
// edge length, which counts half the facet perimeters).
PolytopeMetrics measure_point_set(std::span<const Vec3> points);

}  // namespace sphull
