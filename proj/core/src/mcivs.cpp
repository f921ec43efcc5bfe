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
#include <bit>
#include <string>

#include "relgraph/coloring.hpp"
#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

// Adjacency as bit masks over dense indices; n is bounded by the caller.
std::vector<std::uint64_t> adjacency_masks(const EdgeRelation& e) {
  const auto adj = e.dense_adjacency();
  std::vector<std::uint64_t> masks(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (auto w : adj[v]) masks[v] |= std::uint64_t{1} << w;
  }
  return masks;
}

class McivsWalker {
 public:
  McivsWalker(const EdgeRelation& e, const std::function<void(const IntervalPartition&)>& visit)
      : e_(e), adj_(adjacency_masks(e)), visit_(visit) {}

  void run() { place(0); }

 private:
  // Vertex v joins an open class, opens a new one, or joins the remainder.
  // Classes are opened in order of their smallest member, so every layout is
  // produced exactly once in canonical form.
  void place(std::uint32_t v) {
    const auto n = static_cast<std::uint32_t>(adj_.size());
    if (v == n) {
      emit();
      return;
    }
    // A class still of size 1 must find a partner among the vertices left.
    const std::uint32_t left = n - v;
    std::uint32_t singles = 0;
    for (auto m : classes_) singles += std::popcount(m) == 1 ? 1 : 0;
    if (singles > left) return;

    const std::uint64_t bit = std::uint64_t{1} << v;
    // Indexed access: deeper calls push onto classes_ and may reallocate.
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if ((classes_[i] & adj_[v]) == 0) {
        classes_[i] |= bit;
        place(v + 1);
        classes_[i] &= ~bit;
      }
    }
    classes_.push_back(bit);
    place(v + 1);
    classes_.pop_back();
    if ((remainder_ & adj_[v]) == remainder_) {
      remainder_ |= bit;
      place(v + 1);
      remainder_ &= ~bit;
    }
  }

  void emit() {
    IntervalPartition p;
    for (auto m : classes_) {
      if (std::popcount(m) < 2) return;
      p.classes.push_back(to_ids(m));
    }
    p.remainder = to_ids(remainder_);
    visit_(p);
  }

  std::vector<VertexId> to_ids(std::uint64_t m) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      if (m & (std::uint64_t{1} << i)) out.push_back(e_.vertices[i]);
    }
    return out;
  }

  const EdgeRelation& e_;
  std::vector<std::uint64_t> adj_;
  const std::function<void(const IntervalPartition&)>& visit_;
  std::vector<std::uint64_t> classes_;
  std::uint64_t remainder_ = 0;
};

bool colorable(const std::vector<std::uint64_t>& adj, std::vector<std::uint32_t>& color,
               std::uint32_t v, std::uint32_t k, std::uint32_t used) {
  if (v == adj.size()) return true;
  // Colors beyond used + 1 are symmetric to used + 1.
  const std::uint32_t top = std::min(k, used + 1);
  for (std::uint32_t c = 1; c <= top; ++c) {
    bool ok = true;
    for (std::uint32_t w = 0; w < v; ++w) {
      if ((adj[v] >> w & 1U) && color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable(adj, color, v + 1, k, std::max(used, c))) return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace

void for_each_mcivs(const MultiTraversalRelation& g, std::size_t limit,
                    const std::function<void(const IntervalPartition&)>& visit) {
  const std::size_t n = g.vertex_count();
  if (n > limit || n > 64) {
    throw SizeRefusal("interval enumeration refuses n = " + std::to_string(n) +
                      " above limit " + std::to_string(std::min<std::size_t>(limit, 64)));
  }
  const EdgeRelation e = to_edge_relation(g);
  McivsWalker(e, visit).run();
}

std::vector<IntervalPartition> enumerate_mcivs(const MultiTraversalRelation& g, std::size_t limit) {
  std::vector<IntervalPartition> out;
  for_each_mcivs(g, limit, [&](const IntervalPartition& p) { out.push_back(p); });
  return out;
}

McivsSummary summarize_mcivs(const MultiTraversalRelation& g, std::size_t limit) {
  McivsSummary s;
  s.min_bound = g.vertex_count() + 1;
  for_each_mcivs(g, limit, [&](const IntervalPartition& p) {
    ++s.partitions;
    ++s.bound_counts[p.bound()];
    if (p.bound() < s.min_bound) {
      s.min_bound = p.bound();
      s.min_remainder_at_bound = p.remainder.size();
    } else if (p.bound() == s.min_bound) {
      s.min_remainder_at_bound = std::min(s.min_remainder_at_bound, p.remainder.size());
    }
  });
  return s;
}

std::uint32_t chromatic_oracle(const MultiTraversalRelation& g) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleLimit) {
    throw SizeRefusal("chromatic oracle refuses n = " + std::to_string(n));
  }
  const auto adj = adjacency_masks(to_edge_relation(g));
  std::vector<std::uint32_t> color(n, 0);
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (colorable(adj, color, 0, k, 0)) return k;
  }
  return static_cast<std::uint32_t>(n);
}

}  // namespace relgraph
