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
#include <optional>
#include <span>
#include <vector>

#include "relgraph/relation.hpp"

namespace relgraph {

/// Ordered layering of the reachable vertex set. regions[0] is the seed set;
/// every vertex of regions[i + 1] has an in-arc from regions[i].
struct RegionSequence {
  std::vector<std::vector<VertexId>> regions;  // each sorted ascending
  /// Vertices no region reaches (possible on directed instances).
  std::vector<VertexId> stranded;
  std::size_t seed_count = 0;
  /// Frontier expansions performed, the final empty one included.
  std::size_t loops = 0;

  [[nodiscard]] std::size_t size() const { return regions.size(); }
  /// 0-based region index of `v`, if assigned.
  [[nodiscard]] std::optional<std::size_t> region_of(VertexId v) const;
};

/// Layers the vertex set outward from `seeds`: each region is the set of
/// out-neighbours of the previous one minus everything already assigned.
/// Throws DomainError unless seeds is a duplicate-free subset of the vertex
/// set with 1 <= |seeds| < n.
RegionSequence partition(const MultiTraversalRelation& g, std::span<const VertexId> seeds);

/// i - 1 for v in the i-th region (1-based): the unweighted distance from the
/// nearest seed. Throws std::out_of_range if v is not assigned.
std::size_t region_distance(const RegionSequence& r, VertexId v);

namespace detail {

struct DenseLayers {
  std::vector<std::vector<std::uint32_t>> regions;
  std::vector<std::uint32_t> stranded;
  std::size_t loops = 0;
};

/// Layering over a dense adjacency restricted to vertices with active[v] != 0.
/// Seeds must be active and distinct.
DenseLayers layer_dense(const std::vector<std::vector<std::uint32_t>>& out,
                        std::span<const std::uint32_t> seeds, std::span<const char> active);

}  // namespace detail
}  // namespace relgraph
