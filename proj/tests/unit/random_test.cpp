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

#include "sphull/random.hpp"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "sphull/errors.hpp"
#include "sphull/stats.hpp"

namespace sphull {
namespace {

TEST(RandomStreamTest, SameSeedAndIndexRepeat) {
  RandomStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStreamTest, StreamsDiffer) {
  std::set<std::uint64_t> first;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    first.insert(RandomStream(1, s).next_u64());
  }
  EXPECT_EQ(first.size(), 1000u);
  EXPECT_NE(RandomStream(1, 0).next_u64(), RandomStream(2, 0).next_u64());
}

TEST(RandomStreamTest, SubstreamIsIndependentOfParentPosition) {
  RandomStream a(3, 4);
  const RandomStream child_before = a.substream(9);
  a.next_u64();
  RandomStream child_after = a.substream(9);
  RandomStream copy = child_before;
  EXPECT_EQ(copy.next_u64(), child_after.next_u64());
  EXPECT_NE(RandomStream(3, 4).substream(9).next_u64(),
            RandomStream(3, 4).substream(10).next_u64());
}

TEST(RandomStreamTest, UniformRangeAndMoments) {
  RandomStream rng(5, 0);
  Accumulator acc;
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    acc.add(u);
  }
  const SummaryStats s = summarize(acc);
  EXPECT_NEAR(s.mean, 0.5, 4 * s.std_error);
  EXPECT_NEAR(s.variance, 1.0 / 12.0, 2e-3);
}

class PoissonTest : public ::testing::TestWithParam<double> {};

TEST_P(PoissonTest, MeanAndVariance) {
  const double mean = GetParam();
  RandomStream rng(8, static_cast<std::uint64_t>(mean * 100));
  Accumulator acc;
  const int m = 200000;
  for (int i = 0; i < m; ++i) acc.add(static_cast<double>(rng.poisson(mean)));
  const SummaryStats s = summarize(acc);
  // Var of a Poisson sample mean is mean/m.
  EXPECT_NEAR(s.mean, mean, 4.0 * std::sqrt(mean / m));
  EXPECT_NEAR(s.variance / mean, 1.0, 0.03);
}

INSTANTIATE_TEST_SUITE_P(Means, PoissonTest,
                         ::testing::Values(0.3, 3.0, 12.566, 29.9, 30.0, 50.27,
                                           400.0));

TEST(RandomStreamTest, PoissonRejectsBadMean) {
  RandomStream rng(1, 1);
  EXPECT_THROW(rng.poisson(-1.0), DomainError);
  EXPECT_EQ(rng.poisson(0.0), 0u);
}

}  // namespace
}  // namespace sphull
