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

#include <cstdint>
#include <random>

namespace sphull {

// A seedable random source addressed by (seed, stream_index). Trial i of an
// experiment draws from stream i, so results do not depend on how trials are
// scheduled. The engine is std::mt19937_64, whose output sequence is fixed by
// the standard; all distributions are implemented here rather than taken
// from <random>, whose algorithms vary between standard libraries.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // A fresh stream with the same seed and another index.
  RandomStream with_index(std::uint64_t stream_index) const {
    return RandomStream(seed_, stream_index);
  }

  // Child stream keyed by `key`, independent of this one. Used for reserved
  // retry streams.
  RandomStream substream(std::uint64_t key) const;

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Poisson(mean): inversion below 30, transformed rejection (PTRD) above.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_ = 0;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; a bijective mixer on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

}  // namespace sphull
