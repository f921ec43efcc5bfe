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

#pragma once

#include <cstdint>

namespace relgraph {

/// Minimal positive (k1, k2) with k1 * m2 == k2 * m1, plus the number of
/// cursor moves the search made.
struct BocpsResult {
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  std::uint64_t loops = 0;

  friend bool operator==(const BocpsResult&, const BocpsResult&) = default;
};

struct BocpsOptions {
  /// Fold each run of consecutive moves in one direction into a single step.
  /// Same (k1, k2); `loops` then counts folded steps.
  bool batched = false;
};

/// Based On Cycle Permutation Search.
///
/// Follows one arc position through repeated cycle permutations of a length
/// m1 + m2 cycle whose prefix has length m1. A cursor s starts at 1; while
/// s <= m1 it moves forward by m2 (k1 += 1), otherwise back by m1 (k2 += 1).
/// The search stops when s returns to 1, at which point
/// k1 * m2 - k2 * m1 == 0 with k1 + k2 minimal.
///
/// Throws DomainError unless m1, m2 >= 1.
BocpsResult bocps(std::int64_t m1, std::int64_t m2, const BocpsOptions& options = {});

/// m1 / k1. Throws as bocps.
std::uint64_t gcd_of(std::int64_t m1, std::int64_t m2);

/// m1 * k2. Throws as bocps, or std::overflow_error if the result does not fit.
std::uint64_t lcm_of(std::int64_t m1, std::int64_t m2);

}  // namespace relgraph
