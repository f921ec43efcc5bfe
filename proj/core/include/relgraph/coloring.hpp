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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "relgraph/relation.hpp"

namespace relgraph {

/// Unordered edge {u, v}, stored with u < v.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b);

/// Symmetric, anti-reflexive view of a relation.
struct EdgeRelation {
  std::vector<VertexId> vertices;  // sorted
  std::set<Edge> edges;

  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const;
  /// Sorted neighbour lists indexed like `vertices`.
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> dense_adjacency() const;
  [[nodiscard]] std::size_t max_degree() const;
};

/// {u, v} is an edge iff (u, v) or (v, u) is an arc with u != v.
EdgeRelation to_edge_relation(const MultiTraversalRelation& g);

struct EdgeSubgraph {
  VertexId root;
  std::set<VertexId> leaves;

  friend bool operator==(const EdgeSubgraph&, const EdgeSubgraph&) = default;
};

/// Ordered edge-subgraph partition: every edge belongs to the subgraph of
/// whichever endpoint comes first in `roots_order`.
struct Opers {
  std::vector<VertexId> roots_order;
  /// One entry per vertex, in roots_order; leaves may be empty.
  std::vector<EdgeSubgraph> subgraphs;
  /// Vertices whose subgraph is empty, in roots_order.
  std::vector<VertexId> empty_set;

  [[nodiscard]] const EdgeSubgraph& subgraph_of(VertexId root) const;
  [[nodiscard]] std::size_t non_empty_count() const;
};

/// Throws DomainError unless `order` is a permutation of e.vertices.
Opers build_opers(const EdgeRelation& e, std::span<const VertexId> order);

struct Coloring {
  /// Colors are 1-based and compact: exactly 1..k appear.
  std::map<VertexId, std::uint32_t> assignment;
  std::map<std::uint32_t, std::vector<VertexId>> classes;
  std::uint32_t k = 0;

  /// Renumbers arbitrary positive colors to 1..k, preserving their order.
  static Coloring from_assignment(const std::map<VertexId, std::uint32_t>& raw);
};

/// Graph-partition coloring. Each color class starts from a random seed per
/// connected component of the uncolored subgraph and grows by repeatedly
/// partitioning from the class and admitting third-region vertices that have
/// no neighbour in the class, until no third region remains.
Coloring bogpc(const MultiTraversalRelation& g, std::uint64_t seed);

/// Edge-relation coloring along a random root order drawn from `seed`.
Coloring boerc(const MultiTraversalRelation& g, std::uint64_t seed);

/// Edge-relation coloring along a fixed root order; palette draws use `seed`.
Coloring boerc_with_order(const MultiTraversalRelation& g, std::span<const VertexId> order,
                          std::uint64_t seed);

/// True iff no edge is monochromatic. Throws DomainError if some vertex of g
/// has no color.
bool verify_coloring(const MultiTraversalRelation& g, const Coloring& c);

/// True iff |s| >= 2 and s is independent in e.
bool is_civs(const EdgeRelation& e, std::span<const VertexId> s);

/// Independent classes of size >= 2 plus a remainder that is a clique.
struct IntervalPartition {
  std::vector<std::vector<VertexId>> classes;  // canonical: by smallest member
  std::vector<VertexId> remainder;

  /// |classes| + |remainder|: the colors this layout uses.
  [[nodiscard]] std::size_t bound() const { return classes.size() + remainder.size(); }

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

inline constexpr std::size_t kDefaultMcivsLimit = 20;

/// Calls `visit` once per IntervalPartition of g's vertex set, in canonical
/// form. Throws SizeRefusal if n > limit.
void for_each_mcivs(const MultiTraversalRelation& g, std::size_t limit,
                    const std::function<void(const IntervalPartition&)>& visit);

/// Collects for_each_mcivs into a vector.
std::vector<IntervalPartition> enumerate_mcivs(const MultiTraversalRelation& g,
                                               std::size_t limit = kDefaultMcivsLimit);

struct McivsSummary {
  std::uint64_t partitions = 0;
  std::size_t min_bound = 0;
  /// Smallest |remainder| among partitions attaining min_bound.
  std::size_t min_remainder_at_bound = 0;
  /// Histogram of bound values.
  std::map<std::size_t, std::uint64_t> bound_counts;
};

McivsSummary summarize_mcivs(const MultiTraversalRelation& g,
                             std::size_t limit = kDefaultMcivsLimit);

inline constexpr std::size_t kOracleLimit = 12;

/// Exact chromatic number by backtracking. Throws SizeRefusal if n > 12.
std::uint32_t chromatic_oracle(const MultiTraversalRelation& g);

}  // namespace relgraph
