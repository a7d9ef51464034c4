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

#include "sphull/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sphull/errors.hpp"

namespace sphull {

ProcessSpec ProcessSpec::uniform(long n) {
  if (n < 1) throw DomainError("uniform process needs n >= 1");
  ProcessSpec s;
  s.kind = ProcessKind::kUniform;
  s.n = n;
  return s;
}

ProcessSpec ProcessSpec::poisson(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("Poisson process needs a finite intensity rho > 0");
  }
  ProcessSpec s;
  s.kind = ProcessKind::kPoisson;
  s.rho = rho;
  return s;
}

ProcessSpec ProcessSpec::symmetric(long n) {
  if (n < 1) throw DomainError("symmetric process needs n >= 1");
  ProcessSpec s;
  s.kind = ProcessKind::kSymmetric;
  s.n = n;
  return s;
}

ProcessSpec ProcessSpec::homeoid(long n, const Ellipsoid& e) {
  if (n < 1) throw DomainError("homeoid process needs n >= 1");
  ProcessSpec s;
  s.kind = ProcessKind::kHomeoid;
  s.n = n;
  s.ellipsoid = e;
  return s;
}

std::string to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::kUniform:
      return "uniform";
    case ProcessKind::kPoisson:
      return "poisson";
    case ProcessKind::kSymmetric:
      return "symmetric";
    case ProcessKind::kHomeoid:
      return "ellipsoid";
  }
  return "unknown";
}

std::string ProcessSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind);
  switch (kind) {
    case ProcessKind::kPoisson:
      os << "(rho=" << rho << ")";
      break;
    case ProcessKind::kHomeoid:
      os << "(n=" << n << ", axes=" << ellipsoid->p() << "/" << ellipsoid->q()
         << "/" << ellipsoid->r() << ")";
      break;
    default:
      os << "(n=" << n << ")";
  }
  return os.str();
}

UnitVec3 sample_uniform_point(RandomStream& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double s = std::sqrt((1.0 - z) * (1.0 + z));
  return UnitVec3(s * std::cos(phi), s * std::sin(phi), z);
}

std::vector<UnitVec3> sample_uniform_sphere(std::size_t n, RandomStream& rng) {
  std::vector<UnitVec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_uniform_point(rng));
  return out;
}

std::vector<UnitVec3> sample_poisson_sphere(double rho, RandomStream& rng) {
  if (!(rho > 0.0)) throw DomainError("sample_poisson_sphere: rho must be > 0");
  const auto count = rng.poisson(4.0 * std::numbers::pi * rho);
  return sample_uniform_sphere(static_cast<std::size_t>(count), rng);
}

std::vector<UnitVec3> sample_symmetric(std::size_t n, RandomStream& rng) {
  std::vector<UnitVec3> out = sample_uniform_sphere(n, rng);
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

std::vector<Vec3> sample_homeoid(std::size_t n, const Ellipsoid& e,
                                 RandomStream& rng) {
  std::vector<Vec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(e.map(sample_uniform_point(rng).vec()));
  }
  return out;
}

std::pair<UnitVec3, UnitVec3> sample_chord(RandomStream& rng) {
  UnitVec3 a = sample_uniform_point(rng);
  UnitVec3 b = sample_uniform_point(rng);
  return {a, b};
}

namespace {

std::vector<Vec3> to_vec3(const std::vector<UnitVec3>& in) {
  std::vector<Vec3> out;
  out.reserve(in.size());
  for (const UnitVec3& u : in) out.push_back(u.vec());
  return out;
}

}  // namespace

std::vector<Vec3> sample_process(const ProcessSpec& spec, RandomStream& rng) {
  switch (spec.kind) {
    case ProcessKind::kUniform:
      return to_vec3(
          sample_uniform_sphere(static_cast<std::size_t>(spec.n), rng));
    case ProcessKind::kPoisson:
      return to_vec3(sample_poisson_sphere(spec.rho, rng));
    case ProcessKind::kSymmetric:
      return to_vec3(sample_symmetric(static_cast<std::size_t>(spec.n), rng));
    case ProcessKind::kHomeoid:
      return sample_homeoid(static_cast<std::size_t>(spec.n), *spec.ellipsoid,
                            rng);
  }
  throw DomainError("sample_process: unknown process kind");
}

PoleDistance min_distance_to_pole(std::span<const UnitVec3> points,
                                  const UnitVec3& pole) {
  double best = std::numeric_limits<double>::infinity();
  for (const UnitVec3& x : points) best = std::min(best, distance(x, pole));
  if (!std::isfinite(best)) return {best, best};
  return {best, 2.0 * std::asin(std::min(1.0, best / 2.0))};
}

}  // namespace sphull
