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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sphull/vec3.hpp"

namespace sphull {

using Facet = std::array<int, 3>;
using Edge = std::array<int, 2>;

// Boundary complex of a convex polytope with triangular facets.
//
// Facets list vertex indices counter-clockwise when seen from outside, so
// (b - a) x (c - a) is the outward normal. Edges are derived from the facets:
// unordered pairs stored as (lo, hi), deduplicated and sorted.
//
// Three points form a double-covered triangle: two facets with opposite
// orientation sharing all three edges.
class ConvexPolytope3 {
 public:
  ConvexPolytope3() = default;
  ConvexPolytope3(std::vector<Vec3> vertices, std::vector<Facet> facets);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Number of vertices referenced by at least one facet.
  std::size_t vertex_count() const { return used_vertex_count_; }
  std::size_t facet_count() const { return facets_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Average of the referenced vertices; the interior reference point used for
  // orientation and volume.
  Vec3 vertex_centroid() const;

  // Outward unit normal of facet i.
  Vec3 facet_normal(std::size_t i) const;

  // For every entry of edges(), the facets containing it. Throws
  // NonManifoldEdge if some edge is not shared by exactly two facets.
  std::vector<std::array<int, 2>> edge_facets() const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge> edges_;
  std::size_t used_vertex_count_ = 0;
};

// Convex hull of n >= 3 points lying on a common sphere, by randomized
// incremental insertion with conflict lists. Every input point keeps its index
// in vertices(). Orientation tests are exact, so the result is the true hull
// of the double-precision inputs. A point exactly coplanar with a facet does
// not see it.
//
// Throws DegenerateInput when n < 3, when three points are collinear (n = 3),
// or when all points are coplanar (n >= 4).
ConvexPolytope3 convex_hull(std::span<const Vec3> points);
ConvexPolytope3 convex_hull(std::span<const UnitVec3> points);

}  // namespace sphull
