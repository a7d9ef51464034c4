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

#include <stdexcept>
#include <string>

namespace sphull {

// Root of every error the library throws. Geometry errors and numerical
// domain errors are kept apart so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

// Fewer than three points, repeated points, or an input that does not span
// the dimension the operation needs.
class DegenerateInput : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// An edge that is not shared by exactly two facets.
class NonManifoldEdge : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// A facet plane passing (numerically) through the sphere's center.
class DegenerateCap : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Argument outside the mathematical domain of a closed form.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sphull
