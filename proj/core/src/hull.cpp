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

#include "sphull/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "predicates.hpp"

namespace sphull {

ConvexPolytope3::ConvexPolytope3(std::vector<Vec3> vertices,
                                 std::vector<Facet> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  const int n = static_cast<int>(vertices_.size());
  std::vector<char> used(vertices_.size(), 0);
  edges_.reserve(facets_.size() * 3 / 2);
  for (const Facet& f : facets_) {
    for (int i = 0; i < 3; ++i) {
      const int a = f[i];
      const int b = f[(i + 1) % 3];
      if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw DegenerateInput("ConvexPolytope3: invalid facet index");
      }
      used[a] = 1;
      edges_.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  used_vertex_count_ =
      static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
}

Vec3 ConvexPolytope3::vertex_centroid() const {
  std::vector<char> used(vertices_.size(), 0);
  for (const Facet& f : facets_) {
    for (int v : f) used[v] = 1;
  }
  Vec3 sum;
  std::size_t count = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (used[i]) {
      sum += vertices_[i];
      ++count;
    }
  }
  return count == 0 ? sum : sum / static_cast<double>(count);
}

Vec3 ConvexPolytope3::facet_normal(std::size_t i) const {
  const Facet& f = facets_.at(i);
  const Vec3& a = vertices_[f[0]];
  const Vec3 n = cross(vertices_[f[1]] - a, vertices_[f[2]] - a);
  const double len = norm(n);
  return len > 0.0 ? n / len : n;
}

std::vector<std::array<int, 2>> ConvexPolytope3::edge_facets() const {
  std::vector<std::array<int, 2>> incident(edges_.size(), {-1, -1});
  std::vector<int> count(edges_.size(), 0);
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    const Facet& f = facets_[fi];
    for (int i = 0; i < 3; ++i) {
      const int a = f[i];
      const int b = f[(i + 1) % 3];
      const Edge key{std::min(a, b), std::max(a, b)};
      const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
      const auto e = static_cast<std::size_t>(it - edges_.begin());
      if (count[e] < 2) incident[e][count[e]] = static_cast<int>(fi);
      ++count[e];
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (count[e] != 2) {
      throw NonManifoldEdge("edge (" + std::to_string(edges_[e][0]) + ", " +
                            std::to_string(edges_[e][1]) + ") has " +
                            std::to_string(count[e]) + " incident facets");
    }
  }
  return incident;
}

namespace {

struct HullFacet {
  std::array<int, 3> v{};
  // nb[i] is the facet across the edge (v[i], v[(i + 1) % 3]).
  std::array<int, 3> nb{-1, -1, -1};
  std::vector<int> conflicts;
  int tested_by = -1;
  bool visible = false;
  bool alive = true;
};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class IncrementalHull {
 public:
  explicit IncrementalHull(std::span<const Vec3> points)
      : points_(points),
        conflict_(points.size(), -1),
        start_at_(points.size(), -1),
        end_at_(points.size(), -1) {}

  std::vector<Facet> build() {
    const std::array<int, 4> simplex = initial_simplex();
    make_simplex(simplex);
    std::vector<int> order = insertion_order(simplex);
    assign_initial_conflicts(order);
    for (int p : order) {
      if (conflict_[p] >= 0) insert(p);
    }
    std::vector<Facet> out;
    out.reserve(facets_.size());
    for (const HullFacet& f : facets_) {
      if (f.alive) out.push_back({f.v[0], f.v[1], f.v[2]});
    }
    return out;
  }

 private:
  bool sees(int facet, int point) const {
    const HullFacet& f = facets_[facet];
    return detail::orient3d(points_[f.v[0]], points_[f.v[1]],
                            points_[f.v[2]], points_[point]) > 0;
  }

  std::array<int, 4> initial_simplex() const {
    const int n = static_cast<int>(points_.size());
    const Vec3& p0 = points_[0];
    int i1 = -1;
    double best = 0.0;
    for (int i = 1; i < n; ++i) {
      const double d = norm_squared(points_[i] - p0);
      if (d > best) {
        best = d;
        i1 = i;
      }
    }
    if (i1 < 0) throw DegenerateInput("convex_hull: all points coincide");
    const Vec3 axis = points_[i1] - p0;
    int i2 = -1;
    best = 0.0;
    for (int i = 1; i < n; ++i) {
      const double a = norm_squared(cross(axis, points_[i] - p0));
      if (a > best) {
        best = a;
        i2 = i;
      }
    }
    if (i2 < 0) throw DegenerateInput("convex_hull: all points are collinear");
    const Vec3 normal = cross(axis, points_[i2] - p0);
    int i3 = -1;
    best = 0.0;
    for (int i = 1; i < n; ++i) {
      const double h = std::abs(dot(normal, points_[i] - p0));
      if (h > best) {
        best = h;
        i3 = i;
      }
    }
    if (i3 < 0 ||
        detail::orient3d(p0, points_[i1], points_[i2], points_[i3]) == 0) {
      i3 = -1;
      for (int i = 1; i < n; ++i) {
        if (detail::orient3d(p0, points_[i1], points_[i2], points_[i]) != 0) {
          i3 = i;
          break;
        }
      }
    }
    if (i3 < 0) throw DegenerateInput("convex_hull: all points are coplanar");
    return {0, i1, i2, i3};
  }

  void make_simplex(const std::array<int, 4>& s) {
    static constexpr int kTriples[4][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};
    for (const auto& t : kTriples) {
      HullFacet f;
      f.v = {s[t[0]], s[t[1]], s[t[2]]};
      const int apex = s[t[3]];
      if (detail::orient3d(points_[f.v[0]], points_[f.v[1]], points_[f.v[2]],
                           points_[apex]) > 0) {
        std::swap(f.v[1], f.v[2]);
      }
      facets_.push_back(std::move(f));
    }
    for (int a = 0; a < 4; ++a) {
      for (int i = 0; i < 3; ++i) {
        const int u = facets_[a].v[i];
        const int w = facets_[a].v[(i + 1) % 3];
        for (int b = 0; b < 4; ++b) {
          if (b == a) continue;
          for (int j = 0; j < 3; ++j) {
            if (facets_[b].v[j] == w && facets_[b].v[(j + 1) % 3] == u) {
              facets_[a].nb[i] = b;
            }
          }
        }
      }
    }
  }

  // Deterministic shuffle of the non-simplex points; guards against inputs
  // whose given order makes incremental insertion quadratic.
  std::vector<int> insertion_order(const std::array<int, 4>& simplex) const {
    std::vector<int> order;
    order.reserve(points_.size());
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
      if (std::find(simplex.begin(), simplex.end(), i) == simplex.end()) {
        order.push_back(i);
      }
    }
    std::uint64_t state = 0x5EED5EEDULL + points_.size();
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = splitmix64(state) % i;
      std::swap(order[i - 1], order[j]);
    }
    return order;
  }

  void assign_initial_conflicts(const std::vector<int>& order) {
    for (int p : order) {
      for (int f = 0; f < 4; ++f) {
        if (sees(f, p)) {
          conflict_[p] = f;
          facets_[f].conflicts.push_back(p);
          break;
        }
      }
    }
  }

  int allocate_facet() {
    if (!free_.empty()) {
      const int id = free_.back();
      free_.pop_back();
      HullFacet& f = facets_[id];
      f.nb = {-1, -1, -1};
      f.conflicts.clear();
      f.tested_by = -1;
      f.visible = false;
      f.alive = true;
      return id;
    }
    facets_.emplace_back();
    return static_cast<int>(facets_.size()) - 1;
  }

  void insert(int p) {
    visible_.clear();
    stack_.clear();
    const int f0 = conflict_[p];
    facets_[f0].tested_by = p;
    facets_[f0].visible = true;
    stack_.push_back(f0);
    while (!stack_.empty()) {
      const int f = stack_.back();
      stack_.pop_back();
      visible_.push_back(f);
      for (int g : facets_[f].nb) {
        HullFacet& fg = facets_[g];
        if (fg.tested_by == p) continue;
        fg.tested_by = p;
        fg.visible = sees(g, p);
        if (fg.visible) stack_.push_back(g);
      }
    }

    new_facets_.clear();
    for (int f : visible_) {
      for (int i = 0; i < 3; ++i) {
        const int g = facets_[f].nb[i];
        if (facets_[g].visible && facets_[g].tested_by == p) continue;
        const int a = facets_[f].v[i];
        const int b = facets_[f].v[(i + 1) % 3];
        const int id = allocate_facet();
        HullFacet& nf = facets_[id];
        nf.v = {a, b, p};
        nf.nb[0] = g;
        for (int& back : facets_[g].nb) {
          if (back == f) back = id;
        }
        if (start_at_[a] != -1 || end_at_[b] != -1) {
          throw GeometryError("convex_hull: horizon is not a simple cycle");
        }
        start_at_[a] = id;
        end_at_[b] = id;
        new_facets_.push_back(id);
      }
    }
    for (int id : new_facets_) {
      HullFacet& nf = facets_[id];
      nf.nb[1] = start_at_[nf.v[1]];
      nf.nb[2] = end_at_[nf.v[0]];
      if (nf.nb[1] < 0 || nf.nb[2] < 0) {
        throw GeometryError("convex_hull: horizon is not a closed cycle");
      }
    }
    for (int id : new_facets_) {
      start_at_[facets_[id].v[0]] = -1;
      end_at_[facets_[id].v[1]] = -1;
    }

    conflict_[p] = -1;
    for (int f : visible_) {
      HullFacet& dead = facets_[f];
      for (int q : dead.conflicts) {
        if (q == p) continue;
        conflict_[q] = -1;
        for (int id : new_facets_) {
          if (sees(id, q)) {
            conflict_[q] = id;
            facets_[id].conflicts.push_back(q);
            break;
          }
        }
      }
      dead.conflicts.clear();
      dead.alive = false;
      dead.visible = false;
      free_.push_back(f);
    }
  }

  std::span<const Vec3> points_;
  std::vector<HullFacet> facets_;
  std::vector<int> conflict_;
  std::vector<int> start_at_;
  std::vector<int> end_at_;
  std::vector<int> free_;
  std::vector<int> visible_;
  std::vector<int> stack_;
  std::vector<int> new_facets_;
};

}  // namespace

ConvexPolytope3 convex_hull(std::span<const Vec3> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw DegenerateInput("convex_hull: need at least 3 points, got " +
                          std::to_string(n));
  }
  for (const Vec3& p : points) {
    if (!is_finite(p)) throw DegenerateInput("convex_hull: non-finite point");
  }
  std::vector<Vec3> vertices(points.begin(), points.end());
  if (n == 3) {
    const Vec3 normal = cross(points[1] - points[0], points[2] - points[0]);
    if (norm_squared(normal) == 0.0) {
      throw DegenerateInput("convex_hull: the three points are collinear");
    }
    return ConvexPolytope3(std::move(vertices), {{0, 1, 2}, {0, 2, 1}});
  }
  IncrementalHull hull(points);
  std::vector<Facet> facets = hull.build();
  return ConvexPolytope3(std::move(vertices), std::move(facets));
}

ConvexPolytope3 convex_hull(std::span<const UnitVec3> points) {
  std::vector<Vec3> raw;
  raw.reserve(points.size());
  for (const UnitVec3& u : points) raw.push_back(u.vec());
  return convex_hull(raw);
}

}  // namespace sphull
