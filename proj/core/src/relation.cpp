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

#include "relgraph/relation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

void build_csr(std::size_t n, const std::vector<std::pair<std::uint32_t, DenseArc>>& rows,
               std::vector<std::uint32_t>& offsets, std::vector<DenseArc>& entries) {
  offsets.assign(n + 1, 0);
  for (const auto& [row, entry] : rows) ++offsets[row + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  entries.resize(rows.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [row, entry] : rows) entries[cursor[row]++] = entry;
  for (std::size_t r = 0; r < n; ++r) {
    std::sort(entries.begin() + offsets[r], entries.begin() + offsets[r + 1],
              [](const DenseArc& a, const DenseArc& b) { return a.vertex < b.vertex; });
  }
}

}  // namespace

MultiTraversalRelation MultiTraversalRelation::from_arcs(std::span<const WeightedArc> arcs) {
  if (arcs.empty()) throw DomainError("relation has no arcs");

  MultiTraversalRelation g;
  std::vector<WeightedArc> sorted(arcs.begin(), arcs.end());
  for (const auto& a : sorted) {
    if (a.arc.tail.value == 0 || a.arc.head.value == 0)
      throw DomainError("vertex ids must be positive");
    if (a.weight == 0) throw DomainError("multiplicity must be positive");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const WeightedArc& a, const WeightedArc& b) { return a.arc < b.arc; });

  for (const auto& a : sorted) {
    if (!g.arcs_.empty() && g.arcs_.back().arc == a.arc) {
      auto& w = g.arcs_.back().weight;
      if (w > std::numeric_limits<Multiplicity>::max() - a.weight)
        throw DomainError("multiplicity overflow");
      w += a.weight;
    } else {
      g.arcs_.push_back(a);
    }
  }

  for (const auto& a : g.arcs_) {
    g.vertices_.push_back(a.arc.tail);
    g.vertices_.push_back(a.arc.head);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());

  std::vector<std::pair<std::uint32_t, DenseArc>> out_rows;
  std::vector<std::pair<std::uint32_t, DenseArc>> in_rows;
  out_rows.reserve(g.arcs_.size());
  in_rows.reserve(g.arcs_.size());
  for (const auto& a : g.arcs_) {
    const auto t = *g.index_of(a.arc.tail);
    const auto h = *g.index_of(a.arc.head);
    out_rows.push_back({t, DenseArc{h, a.weight}});
    in_rows.push_back({h, DenseArc{t, a.weight}});
  }
  build_csr(g.vertices_.size(), out_rows, g.out_offsets_, g.out_);
  build_csr(g.vertices_.size(), in_rows, g.in_offsets_, g.in_);
  return g;
}

std::uint64_t MultiTraversalRelation::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& a : arcs_) total += a.weight;
  return total;
}

Multiplicity MultiTraversalRelation::weight(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a,
                             [](const WeightedArc& x, const Arc& key) { return x.arc < key; });
  if (it == arcs_.end() || it->arc != a) return 0;
  return it->weight;
}

std::optional<std::uint32_t> MultiTraversalRelation::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::span<const DenseArc> MultiTraversalRelation::out_arcs(std::uint32_t index) const {
  return std::span<const DenseArc>(out_).subspan(out_offsets_[index],
                                                 out_offsets_[index + 1] - out_offsets_[index]);
}

std::span<const DenseArc> MultiTraversalRelation::in_arcs(std::uint32_t index) const {
  return std::span<const DenseArc>(in_).subspan(in_offsets_[index],
                                                in_offsets_[index + 1] - in_offsets_[index]);
}

bool MultiTraversalRelation::has_self_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const WeightedArc& a) { return a.arc.is_self_loop(); });
}

MultiTraversalRelation MultiTraversalRelation::mirrored() const {
  RelationBuilder b;
  for (const auto& a : arcs_) {
    b.add(a);
    // A loop is its own reverse; doubling it would change its weight.
    if (!a.arc.is_self_loop()) b.add(a.arc.head, a.arc.tail, a.weight);
  }
  return b.build();
}

RelationBuilder& RelationBuilder::add(VertexId tail, VertexId head, Multiplicity weight) {
  arcs_.push_back(WeightedArc{Arc{tail, head}, weight});
  return *this;
}

RelationBuilder& RelationBuilder::add_edge(VertexId u, VertexId v, Multiplicity weight) {
  add(u, v, weight);
  return add(v, u, weight);
}

MultiTraversalRelation RelationBuilder::build() const {
  return MultiTraversalRelation::from_arcs(arcs_);
}

Multiplicity MultipleVisitingSet::max_weight() const {
  Multiplicity best = 0;
  for (const auto& [source, w] : sources) best = std::max(best, w);
  return best;
}

std::vector<WeightedUnitSubgraph> build_unit_subgraphs(const MultiTraversalRelation& g) {
  std::vector<WeightedUnitSubgraph> out;
  for (const auto& a : g.arcs()) {
    // arcs() is sorted by tail, so each root's arcs are contiguous.
    if (out.empty() || out.back().root != a.arc.tail) out.push_back({a.arc.tail, {}});
    out.back().leaves.emplace(a.arc.head, a.weight);
  }
  return out;
}

std::vector<MultipleVisitingSet> build_visiting_sets(const MultiTraversalRelation& g) {
  std::map<VertexId, MultipleVisitingSet> by_head;
  for (const auto& a : g.arcs()) {
    auto& set = by_head[a.arc.head];
    set.head = a.arc.head;
    set.sources.emplace(a.arc.tail, a.weight);
  }
  std::vector<MultipleVisitingSet> out;
  out.reserve(by_head.size());
  for (auto& [head, set] : by_head) out.push_back(std::move(set));
  return out;
}

GraphClass classify(const MultiTraversalRelation& g) {
  bool all_unit = true;
  bool any_missing_reverse = false;
  bool all_reverse_equal = true;
  for (const auto& a : g.arcs()) {
    if (a.arc.is_self_loop()) continue;
    if (a.weight != 1) all_unit = false;
    const Multiplicity back = g.weight(a.arc.reversed());
    if (back == 0) {
      any_missing_reverse = true;
      all_reverse_equal = false;
    } else if (back != a.weight) {
      all_reverse_equal = false;
    }
  }
  if (all_unit && !any_missing_reverse) return GraphClass::kSimple;
  if (all_unit) return GraphClass::kDirected;
  if (all_reverse_equal) return GraphClass::kMulti;
  return GraphClass::kMixed;
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kDirected: return "Directed";
    case GraphClass::kSimple: return "Simple";
    case GraphClass::kMulti: return "Multi";
    case GraphClass::kMixed: return "Mixed";
  }
  return "?";
}

bool is_connected(const MultiTraversalRelation& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    auto visit = [&](std::span<const DenseArc> row) {
      for (const auto& a : row) {
        if (!seen[a.vertex]) {
          seen[a.vertex] = 1;
          ++reached;
          stack.push_back(a.vertex);
        }
      }
    };
    visit(g.out_arcs(v));
    visit(g.in_arcs(v));
  }
  return reached == n;
}

}  // namespace relgraph
