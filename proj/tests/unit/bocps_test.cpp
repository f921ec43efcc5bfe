// Copyright 2026 The relgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <limits>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "relgraph/bocps.hpp"
#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

TEST(BocpsTest, Examples) {
  EXPECT_EQ(bocps(4, 6), (BocpsResult{2, 3, 5}));
  EXPECT_EQ(bocps(1, 1), (BocpsResult{1, 1, 2}));
  EXPECT_EQ(bocps(7, 5), (BocpsResult{7, 5, 12}));
}

TEST(BocpsTest, RejectsNonPositive) {
  EXPECT_THROW(bocps(0, 3), DomainError);
  EXPECT_THROW(bocps(3, -1), DomainError);
  EXPECT_THROW(gcd_of(0, 0), DomainError);
  EXPECT_THROW(lcm_of(-2, 5), DomainError);
}

TEST(BocpsTest, GcdLcmExamples) {
  EXPECT_EQ(gcd_of(4, 6), 2U);
  EXPECT_EQ(gcd_of(9, 9), 9U);
  EXPECT_EQ(gcd_of(1, 17), 1U);
  EXPECT_EQ(lcm_of(4, 6), 12U);
  EXPECT_EQ(lcm_of(13, 1), 13U);
  EXPECT_EQ(lcm_of(3, 5), 15U);
}

TEST(BocpsTest, LcmOverflowIsReported) {
  // The batched walk folds the long forward runs, so this returns quickly.
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(lcm_of(big, 3), std::overflow_error);
  EXPECT_EQ(gcd_of(big, 7), 7U);
}

TEST(BocpsPropertyTest, EuclidEquivalenceAndMinimality) {
  for (std::int64_t a = 1; a <= 200; ++a) {
    for (std::int64_t b = 1; b <= 200; ++b) {
      const auto r = bocps(a, b);
      const auto g = std::gcd(a, b);
      ASSERT_EQ(r.k1, static_cast<std::uint64_t>(a / g));
      ASSERT_EQ(r.k2, static_cast<std::uint64_t>(b / g));
      ASSERT_EQ(r.k1 * static_cast<std::uint64_t>(b), r.k2 * static_cast<std::uint64_t>(a));
      ASSERT_EQ(std::gcd(r.k1, r.k2), 1U);
      ASSERT_EQ(r.loops, r.k1 + r.k2);
      ASSERT_LE(r.loops, static_cast<std::uint64_t>(a + b));
    }
  }
}

TEST(BocpsPropertyTest, BatchedModeAgreesWithFewerLoops) {
  for (std::int64_t a = 1; a <= 150; ++a) {
    for (std::int64_t b = 1; b <= 150; ++b) {
      const auto plain = bocps(a, b);
      const auto batched = bocps(a, b, {.batched = true});
      ASSERT_EQ(batched.k1, plain.k1);
      ASSERT_EQ(batched.k2, plain.k2);
      ASSERT_LE(batched.loops, plain.loops);
    }
  }
  // Skewed inputs fold long runs: about 31 additions of 97 per wrap of 2999.
  const auto r = bocps(2999, 97, {.batched = true});
  EXPECT_EQ(r.k1, 2999U);
  EXPECT_EQ(r.k2, 97U);
  EXPECT_LT(r.loops, bocps(2999, 97).loops / 10);
}

TEST(BocpsPropertyTest, CommonFactorLeavesLoopsUnchanged) {
  for (std::int64_t s = 1; s <= 20; ++s) {
    for (std::int64_t t = 1; t <= 20; ++t) {
      if (std::gcd(s, t) != 1) continue;
      for (std::int64_t a = 1; a <= 12; ++a) {
        EXPECT_EQ(bocps(a * s, a * t).loops, bocps(s, t).loops);
      }
    }
  }
}

}  // namespace
}  // namespace relgraph
