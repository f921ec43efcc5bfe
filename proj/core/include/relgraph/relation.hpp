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
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "relgraph/vertex.hpp"

namespace relgraph {

struct WeightedArc {
  Arc arc;
  Multiplicity weight = 1;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

/// Neighbour entry in the dense adjacency: `vertex` is a dense index into
/// MultiTraversalRelation::vertices().
struct DenseArc {
  std::uint32_t vertex;
  Multiplicity weight;
};

/// The multiple traversal relation: a multiset of ordered vertex pairs.
///
/// Immutable once built. The vertex set is exactly the set of arc endpoints,
/// so an instance never carries isolated vertices. Every stored multiplicity
/// is at least 1. Vertices are kept sorted by id; the dense index of a vertex
/// is its rank in that order, so iterating a dense adjacency row visits
/// neighbours in ascending id order.
class MultiTraversalRelation {
 public:
  /// Sums duplicate arcs. Throws DomainError on an empty arc list, a zero
  /// vertex id or a zero multiplicity.
  static MultiTraversalRelation from_arcs(std::span<const WeightedArc> arcs);

  [[nodiscard]] std::span<const VertexId> vertices() const { return vertices_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }

  /// Distinct arcs sorted by (tail, head).
  [[nodiscard]] std::span<const WeightedArc> arcs() const { return arcs_; }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] std::uint64_t total_multiplicity() const;

  /// Multiplicity of `a`, 0 if absent.
  [[nodiscard]] Multiplicity weight(Arc a) const;
  [[nodiscard]] Multiplicity weight(VertexId tail, VertexId head) const {
    return weight(Arc{tail, head});
  }

  [[nodiscard]] bool contains(VertexId v) const { return index_of(v).has_value(); }
  [[nodiscard]] std::optional<std::uint32_t> index_of(VertexId v) const;
  [[nodiscard]] VertexId vertex_at(std::uint32_t index) const { return vertices_[index]; }

  [[nodiscard]] std::span<const DenseArc> out_arcs(std::uint32_t index) const;
  [[nodiscard]] std::span<const DenseArc> in_arcs(std::uint32_t index) const;

  [[nodiscard]] bool has_self_loops() const;

  /// Adds the reverse of every non-loop arc with equal weight.
  [[nodiscard]] MultiTraversalRelation mirrored() const;

  friend bool operator==(const MultiTraversalRelation& a,
                         const MultiTraversalRelation& b) {
    return a.arcs_ == b.arcs_;
  }

 private:
  MultiTraversalRelation() = default;

  std::vector<VertexId> vertices_;
  std::vector<WeightedArc> arcs_;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<DenseArc> out_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<DenseArc> in_;
};

/// Accumulates arcs (summing duplicates) and produces a relation.
class RelationBuilder {
 public:
  RelationBuilder& add(VertexId tail, VertexId head, Multiplicity weight = 1);
  /// Adds both (u,v) and (v,u).
  RelationBuilder& add_edge(VertexId u, VertexId v, Multiplicity weight = 1);
  RelationBuilder& add(const WeightedArc& a) { return add(a.arc.tail, a.arc.head, a.weight); }

  [[nodiscard]] bool empty() const { return arcs_.empty(); }
  [[nodiscard]] MultiTraversalRelation build() const;

 private:
  std::vector<WeightedArc> arcs_;
};

/// All arcs sharing one tail: root plus weighted leaves.
struct WeightedUnitSubgraph {
  VertexId root;
  std::map<VertexId, Multiplicity> leaves;

  friend bool operator==(const WeightedUnitSubgraph&, const WeightedUnitSubgraph&) = default;
};

/// All arcs sharing one head: weighted sources plus head.
struct MultipleVisitingSet {
  VertexId head;
  std::map<VertexId, Multiplicity> sources;

  [[nodiscard]] Multiplicity max_weight() const;

  friend bool operator==(const MultipleVisitingSet&, const MultipleVisitingSet&) = default;
};

/// One subgraph per distinct tail, ordered by root id.
std::vector<WeightedUnitSubgraph> build_unit_subgraphs(const MultiTraversalRelation& g);

/// One visiting set per distinct head, ordered by head id.
std::vector<MultipleVisitingSet> build_visiting_sets(const MultiTraversalRelation& g);

enum class GraphClass { kDirected, kSimple, kMulti, kMixed };

/// Self-loops are ignored. Simple: every arc weight 1 with its reverse
/// present. Directed: some reverse absent, all weights 1. Multi: every arc has
/// a reverse of equal weight and some weight exceeds 1. Mixed otherwise.
GraphClass classify(const MultiTraversalRelation& g);

std::string_view to_string(GraphClass c);

/// Weak connectivity (arcs read as undirected).
bool is_connected(const MultiTraversalRelation& g);

}  // namespace relgraph
