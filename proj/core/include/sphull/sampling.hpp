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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sphull/ellipsoid.hpp"
#include "sphull/random.hpp"
#include "sphull/vec3.hpp"

namespace sphull {

enum class ProcessKind { kUniform, kPoisson, kSymmetric, kHomeoid };

// Which random point set to draw. Build through the named factories; they
// validate the parameters.
struct ProcessSpec {
  ProcessKind kind = ProcessKind::kUniform;
  long n = 0;          // points (uniform, homeoid) or pairs (symmetric)
  double rho = 0.0;    // Poisson intensity per unit area
  std::optional<Ellipsoid> ellipsoid;

  static ProcessSpec uniform(long n);
  static ProcessSpec poisson(double rho);
  static ProcessSpec symmetric(long n);
  static ProcessSpec homeoid(long n, const Ellipsoid& e);

  std::string describe() const;
};

std::string to_string(ProcessKind kind);

// n i.i.d. uniform points: z ~ U[-1, 1], phi ~ U[0, 2 pi).
std::vector<UnitVec3> sample_uniform_sphere(std::size_t n, RandomStream& rng);

// Single uniform point; the building block of every sampler.
UnitVec3 sample_uniform_point(RandomStream& rng);

// N ~ Poisson(4 pi rho), then N uniform points.
std::vector<UnitVec3> sample_poisson_sphere(double rho, RandomStream& rng);

// n uniform points followed by their n antipodes.
std::vector<UnitVec3> sample_symmetric(std::size_t n, RandomStream& rng);

// Uniform sphere points pushed through diag(p, q, r).
std::vector<Vec3> sample_homeoid(std::size_t n, const Ellipsoid& e,
                                 RandomStream& rng);

// Two independent uniform points.
std::pair<UnitVec3, UnitVec3> sample_chord(RandomStream& rng);

// Draws the point set a ProcessSpec describes.
std::vector<Vec3> sample_process(const ProcessSpec& spec, RandomStream& rng);

struct PoleDistance {
  double euclidean = 0.0;
  double spherical = 0.0;
};

// Minimum Euclidean and great-circle distance from `pole` to the points.
// Empty input yields +infinity for both.
PoleDistance min_distance_to_pole(std::span<const UnitVec3> points,
                                  const UnitVec3& pole);

}  // namespace sphull
