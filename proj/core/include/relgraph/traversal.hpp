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
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "relgraph/relation.hpp"

namespace relgraph {

/// A vertex sequence produced under equivalent visiting.
struct SearchPath {
  std::vector<VertexId> vertices;

  /// Appearance count of each vertex on the path.
  [[nodiscard]] std::map<VertexId, std::uint32_t> occurrence() const;
  /// Number of arcs, i.e. vertices.size() - 1.
  [[nodiscard]] std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend auto operator<=>(const SearchPath&, const SearchPath&) = default;
};

/// Spanning maximal paths. Those whose last vertex has an arc back to the
/// start are also counted as cycles, so hamiltonian_cycles <= hamiltonian_paths.
struct HamiltonStats {
  std::uint64_t hamiltonian_paths = 0;
  std::uint64_t hamiltonian_cycles = 0;

  /// Each undirected cycle is found once per direction.
  [[nodiscard]] std::uint64_t undirected_cycles() const { return hamiltonian_cycles / 2; }

  friend bool operator==(const HamiltonStats&, const HamiltonStats&) = default;
};

struct TraversalResult {
  /// Maximal paths in emission order; empty when paths are not retained.
  std::vector<SearchPath> paths;
  /// One per partial path popped and expanded, the root included.
  std::uint64_t loop_count = 0;
  /// Number of maximal paths.
  std::uint64_t breadth = 0;
  HamiltonStats hamilton;
  bool paths_retained = false;
  /// Set when the relation is not weakly connected; the search still ran.
  bool disconnected = false;

  [[nodiscard]] double ratio() const {
    return breadth == 0 ? 0.0 : static_cast<double>(loop_count) / static_cast<double>(breadth);
  }
};

/// Receives every maximal path. In parallel mode calls are serialized but
/// their order is unspecified.
using PathSink = std::function<void(std::span<const VertexId>)>;

struct TraversalOptions {
  bool retain_paths = true;
  PathSink sink;
  /// OBOTS only. 1 is the deterministic mode; more splits the search tree into
  /// independent subtrees. Counts and the path set do not depend on it.
  unsigned threads = 1;
};

/// phi: 1 iff (u, v) is present with positive multiplicity.
bool characteristic(const MultiTraversalRelation& g, VertexId u, VertexId v);

/// psi: every source weight of `nu` minus one, floored at 0.
MultipleVisitingSet equivalent_visit(const MultipleVisitingSet& nu);

/// Phi in counting form: the leaves of `subgraph` whose weight exceeds their
/// appearance count on `path`, ascending. Self-loops are never offered.
/// Throws DomainError if the subgraph root is not the path's last vertex.
std::vector<VertexId> enumerate_next(const WeightedUnitSubgraph& subgraph,
                                     std::span<const VertexId> path);

/// The mutable weight table used by BOTS. Each instance owns a copy of the
/// relation's multiplicities.
class ResidualTable {
 public:
  explicit ResidualTable(const MultiTraversalRelation& g);

  /// Resets all weights to the relation's multiplicities.
  void reset();
  /// psi on the visiting set of `head`.
  void equivalent_visit(VertexId head);
  [[nodiscard]] bool characteristic(VertexId u, VertexId v) const;
  /// Phi on the unit subgraph of `root`: leaves with residual weight > 0.
  [[nodiscard]] std::vector<VertexId> enumerate_next(VertexId root) const;

  void equivalent_visit_dense(std::uint32_t head);
  void enumerate_next_dense(std::uint32_t root, std::vector<std::uint32_t>& out) const;

 private:
  const MultiTraversalRelation* g_;
  // Indexed like the relation's out-adjacency.
  std::vector<std::uint32_t> row_offset_;
  std::vector<Multiplicity> residual_;
};

/// Exhaustive search by table copying: each popped path rebuilds a residual
/// table from the relation by applying psi once per vertex appearance, then
/// expands the end vertex with Phi. Throws DomainError for an unknown start.
TraversalResult bots_search(const MultiTraversalRelation& g, VertexId start,
                            const TraversalOptions& options = {});

/// Exhaustive search by occurrence counting: a leaf is admissible while its
/// arc weight exceeds its count on the current path. Same result contract as
/// bots_search.
TraversalResult obots_search(const MultiTraversalRelation& g, VertexId start,
                             const TraversalOptions& options = {});

/// Recomputes the Hamiltonian split from retained paths. Throws DomainError if
/// `r` did not retain its paths.
HamiltonStats hamilton_stats(const TraversalResult& r, const MultiTraversalRelation& g,
                             VertexId start);

/// Hamiltonian-cycle count from every start vertex. Requires a connected
/// Simple relation (DomainError otherwise).
std::map<VertexId, std::uint64_t> traversal_invariant(const MultiTraversalRelation& g,
                                                      unsigned threads = 1);

}  // namespace relgraph
