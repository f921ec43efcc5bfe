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

#include "relgraph/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "relgraph/errors.hpp"

namespace relgraph {
namespace detail {

DenseLayers layer_dense(const std::vector<std::vector<std::uint32_t>>& out,
                        std::span<const std::uint32_t> seeds, std::span<const char> active) {
  DenseLayers layers;
  const std::size_t n = out.size();
  // Candidates C = V \ R, tracked as a single assigned mask.
  std::vector<char> assigned(n, 0);
  for (auto s : seeds) assigned[s] = 1;

  std::vector<std::uint32_t> current(seeds.begin(), seeds.end());
  std::sort(current.begin(), current.end());
  while (!current.empty()) {
    ++layers.loops;
    std::vector<std::uint32_t> next;
    for (auto v : current) {
      for (auto w : out[v]) {
        if (active[w] && !assigned[w]) {
          assigned[w] = 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layers.regions.push_back(std::move(current));
    current = std::move(next);
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (active[v] && !assigned[v]) layers.stranded.push_back(v);
  }
  return layers;
}

}  // namespace detail

std::optional<std::size_t> RegionSequence::region_of(VertexId v) const {
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (std::binary_search(regions[i].begin(), regions[i].end(), v)) return i;
  }
  return std::nullopt;
}

RegionSequence partition(const MultiTraversalRelation& g, std::span<const VertexId> seeds) {
  const std::size_t n = g.vertex_count();
  if (seeds.empty()) throw DomainError("partition needs at least one seed");
  if (seeds.size() >= n) throw DomainError("partition needs fewer seeds than vertices");

  std::vector<std::uint32_t> dense_seeds;
  for (auto s : seeds) {
    const auto idx = g.index_of(s);
    if (!idx) throw DomainError("seed " + std::to_string(s.value) + " not in relation");
    dense_seeds.push_back(*idx);
  }
  std::sort(dense_seeds.begin(), dense_seeds.end());
  if (std::adjacent_find(dense_seeds.begin(), dense_seeds.end()) != dense_seeds.end()) {
    throw DomainError("duplicate seed");
  }

  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const auto& a : g.out_arcs(v)) {
      if (a.vertex != v) out[v].push_back(a.vertex);
    }
  }
  const std::vector<char> active(n, 1);
  const auto layers = detail::layer_dense(out, dense_seeds, active);

  RegionSequence r;
  r.seed_count = seeds.size();
  r.loops = layers.loops;
  for (const auto& region : layers.regions) {
    auto& ids = r.regions.emplace_back();
    for (auto v : region) ids.push_back(g.vertex_at(v));
  }
  for (auto v : layers.stranded) r.stranded.push_back(g.vertex_at(v));
  return r;
}

std::size_t region_distance(const RegionSequence& r, VertexId v) {
  const auto idx = r.region_of(v);
  if (!idx) throw std::out_of_range("vertex " + std::to_string(v.value) + " is not assigned");
  return *idx;
}

}  // namespace relgraph
