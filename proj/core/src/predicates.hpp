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

#include "sphull/vec3.hpp"

namespace sphull::detail {

// Sign of det[b - a, c - a, d - a]: +1 when d lies on the side the normal
// (b - a) x (c - a) points to, -1 on the other side, 0 when the four points
// are exactly coplanar. A floating-point filter decides almost every call;
// the rest are settled in exact rational arithmetic.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Same sign convention, evaluated exactly. Exposed for tests.
int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

}  // namespace sphull::detail
