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

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "random_graphs.hpp"
#include "relgraph/errors.hpp"
#include "relgraph/generators.hpp"
#include "relgraph/sequences.hpp"
#include "relgraph/traversal.hpp"

namespace relgraph {
namespace {

using namespace relgraph::literals;

ArcSequence arcs(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> xs) {
  ArcSequence out;
  for (auto [u, v] : xs) out.push_back(Arc{VertexId{u}, VertexId{v}});
  return out;
}

ArcSequence ring(std::size_t n) {
  ArcSequence out;
  for (std::uint32_t i = 1; i <= n; ++i) {
    out.push_back(Arc{VertexId{i}, VertexId{i == n ? 1U : i + 1}});
  }
  return out;
}

/// Closed vertex walk u_0 .. u_{n-1} u_0 with shuffled labels.
ArcSequence random_cycle(testing::Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  ArcSequence out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Arc{VertexId{labels[i]}, VertexId{labels[(i + 1) % n]}});
  }
  return out;
}

TEST(TrailTest, Examples) {
  EXPECT_TRUE(is_trail(arcs({{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_trail(arcs({{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_trail(arcs({{1, 1}, {1, 2}})));
  EXPECT_FALSE(is_trail(arcs({{1, 2}})));
  EXPECT_FALSE(is_trail({}));
}

TEST(PathTest, Examples) {
  EXPECT_TRUE(is_path(arcs({{1, 2}})));
  EXPECT_TRUE(is_path(arcs({{1, 2}, {2, 3}, {3, 1}})));
  EXPECT_FALSE(is_path(arcs({{1, 2}, {2, 3}, {3, 2}})));
  EXPECT_FALSE(is_path(arcs({{1, 1}})));
  EXPECT_FALSE(is_path(arcs({{1, 2}, {2, 3}, {3, 4}, {4, 2}})));
  EXPECT_FALSE(is_path({}));
}

TEST(CycleTest, Examples) {
  EXPECT_TRUE(is_cycle(arcs({{1, 2}, {2, 1}})));
  EXPECT_FALSE(is_cycle(arcs({{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_cycle(arcs({{1, 2}})));
  EXPECT_TRUE(is_cycle(ring(6)));
}

TEST(MediumVerticesTest, Examples) {
  const auto vs = [](std::initializer_list<std::uint32_t> xs) {
    std::vector<VertexId> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
  };
  EXPECT_EQ(medium_vertices(arcs({{1, 2}, {2, 3}, {3, 4}})), vs({2, 3}));
  EXPECT_EQ(medium_vertices(arcs({{1, 2}, {2, 1}})), vs({2}));
  EXPECT_TRUE(medium_vertices(arcs({{1, 2}})).empty());
  EXPECT_THROW(medium_vertices(arcs({{1, 2}, {3, 4}})), DomainError);
}

TEST(CyclePermuteTest, Examples) {
  EXPECT_EQ(cycle_permute(ring(3), {1, 1}), arcs({{2, 3}, {3, 1}, {1, 2}}));
  EXPECT_EQ(cycle_permute(ring(5), {0, 4}), ring(5));
  EXPECT_EQ(cycle_permute(ring(5), {3, 0}), ring(5));
  EXPECT_EQ(cycle_permute(ring(6), {2, 3}), ring(6));
  EXPECT_THROW(cycle_permute(arcs({{1, 2}, {2, 3}}), {1, 1}), DomainError);
  EXPECT_THROW(cycle_permute(ring(3), {4, 1}), DomainError);
}

// The prefix/suffix swap written out literally, as the reference for rotation.
ArcSequence swap_once(const ArcSequence& s, std::size_t m) {
  ArcSequence out(s.begin() + static_cast<std::ptrdiff_t>(m), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

TEST(CyclePermuteTest, ClosureAndLiteralSwap) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 12);
    const auto c = random_cycle(rng, n);
    for (std::size_t m = 0; m <= n; ++m) {
      ArcSequence literal = c;
      for (std::size_t power = 0; power <= 2 * n; ++power) {
        const auto p = cycle_permute(c, {m, power});
        EXPECT_TRUE(is_cycle(p));
        EXPECT_EQ(p.size(), n);
        EXPECT_EQ(p, literal) << "n=" << n << " m=" << m << " M=" << power;
        literal = swap_once(literal, m);
      }
    }
  }
}

TEST(MinimalPowerTest, Examples) {
  EXPECT_EQ(minimal_power(6, 2), 3U);
  EXPECT_EQ(minimal_power(5, 2), 5U);
  EXPECT_EQ(minimal_power(7, 1), 7U);
  EXPECT_EQ(minimal_power(7, 7), 1U);
  EXPECT_THROW(minimal_power(5, 0), DomainError);
  EXPECT_THROW(minimal_power(5, 6), DomainError);
  EXPECT_THROW(minimal_power_by_bocps(5, 6), DomainError);
}

TEST(MinimalPowerTest, LeastIdentityPowerUpTo60) {
  for (std::size_t n = 2; n <= 60; ++n) {
    const auto c = ring(n);
    for (std::size_t m = 1; m <= n; ++m) {
      const std::size_t mp = minimal_power(n, m);
      EXPECT_LE(mp, n);
      EXPECT_EQ(mp, minimal_power_by_bocps(n, m)) << n << "," << m;
      ArcSequence cur = c;
      std::size_t first_identity = 0;
      for (std::size_t power = 1; power <= n; ++power) {
        cur = swap_once(cur, m % n == 0 ? 0 : m);
        if (cur == c) {
          first_identity = power;
          break;
        }
      }
      EXPECT_EQ(first_identity, mp) << n << "," << m;
    }
  }
}

TEST(ChainsTest, Examples) {
  const auto two = chains_of(arcs({{1, 2}, {2, 1}}));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0], arcs({{1, 2}}));
  EXPECT_EQ(two[1], arcs({{2, 1}}));
  EXPECT_EQ(chains_of(ring(3)).size(), 3U);
  EXPECT_THROW(chains_of(arcs({{1, 2}, {2, 3}})), DomainError);
}

TEST(ChainsTest, DistinctVertexCyclesHaveNChainsCoveringAllVertices) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 15);
    const auto c = random_cycle(rng, n);
    const auto chains = chains_of(c);
    EXPECT_EQ(chains.size(), n);
    for (const auto& ch : chains) {
      std::set<VertexId> seen;
      for (const auto& a : ch) {
        seen.insert(a.tail);
        seen.insert(a.head);
      }
      EXPECT_EQ(seen.size(), n);
    }
  }
}

std::vector<VertexId> closed_walk(const SearchPath& p) {
  auto v = p.vertices;
  v.push_back(p.vertices.front());
  return v;
}

TEST(HamiltonCycleTest, ClosedSpanningPathsAreCyclesWithNChains) {
  const auto g = gen_dodecahedron();
  const auto r = obots_search(g, 1_v);
  std::size_t closed = 0;
  for (const auto& p : r.paths) {
    if (p.vertices.size() != g.vertex_count() || g.weight(p.vertices.back(), 1_v) == 0) continue;
    const auto walk = closed_walk(p);
    const auto s = to_arc_sequence(walk);
    ASSERT_TRUE(is_cycle(s));
    EXPECT_EQ(chains_of(s).size(), g.vertex_count());
    ++closed;
  }
  EXPECT_EQ(closed, 60U);
}

// Rotating a Hamiltonian cycle found from one start gives one found from any
// other start.
TEST(HamiltonCycleTest, RotationsReachEveryStart) {
  const auto g = gen_dodecahedron();
  std::map<VertexId, std::set<ArcSequence>> by_start;
  for (auto v : g.vertices()) {
    for (const auto& p : obots_search(g, v).paths) {
      if (p.vertices.size() == g.vertex_count() && g.weight(p.vertices.back(), v) > 0) {
        by_start[v].insert(to_arc_sequence(closed_walk(p)));
      }
    }
  }
  for (const auto& s : by_start.at(1_v)) {
    for (std::size_t m = 0; m < s.size(); ++m) {
      const auto rotated = cycle_permute(s, {m, 1});
      EXPECT_TRUE(by_start.at(rotated.front().tail).contains(rotated));
    }
  }
}

}  // namespace
}  // namespace relgraph
