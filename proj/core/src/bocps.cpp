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

#include "relgraph/bocps.hpp"

#include <limits>
#include <stdexcept>

#include "relgraph/errors.hpp"

namespace relgraph {

BocpsResult bocps(std::int64_t m1, std::int64_t m2, const BocpsOptions& options) {
  if (m1 < 1 || m2 < 1) throw DomainError("bocps needs m1, m2 >= 1");
  const auto a = static_cast<std::uint64_t>(m1);
  const auto b = static_cast<std::uint64_t>(m2);
  const std::uint64_t cap = a + b;

  BocpsResult r;
  std::uint64_t s = 1;
  while (r.loops < cap) {
    ++r.loops;
    if (s > a) {
      if (options.batched) {
        const std::uint64_t steps = (s - 1) / a;
        s -= steps * a;
        r.k2 += steps;
      } else {
        s -= a;
        ++r.k2;
      }
    } else if (options.batched) {
      const std::uint64_t steps = (a - s) / b + 1;
      s += steps * b;
      r.k1 += steps;
    } else {
      s += b;
      ++r.k1;
    }
    if (s == 1) return r;
  }
  throw InvariantViolation("bocps cursor did not return within m1 + m2 steps");
}

std::uint64_t gcd_of(std::int64_t m1, std::int64_t m2) {
  const auto r = bocps(m1, m2, {.batched = true});
  return static_cast<std::uint64_t>(m1) / r.k1;
}

std::uint64_t lcm_of(std::int64_t m1, std::int64_t m2) {
  const auto r = bocps(m1, m2, {.batched = true});
  const auto a = static_cast<std::uint64_t>(m1);
  if (r.k2 != 0 && a > std::numeric_limits<std::uint64_t>::max() / r.k2) {
    throw std::overflow_error("lcm does not fit in 64 bits");
  }
  return a * r.k2;
}

}  // namespace relgraph
