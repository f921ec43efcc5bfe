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

#include "relgraph/coloring.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "relgraph/errors.hpp"
#include "relgraph/partition.hpp"

namespace relgraph {
namespace {

using Rng = std::mt19937_64;

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

std::uint32_t dense_index(const EdgeRelation& e, VertexId v) {
  const auto it = std::lower_bound(e.vertices.begin(), e.vertices.end(), v);
  if (it == e.vertices.end() || *it != v) {
    throw DomainError("vertex " + std::to_string(v.value) + " not in edge relation");
  }
  return static_cast<std::uint32_t>(it - e.vertices.begin());
}

// Connected components of the subgraph induced by `active`, as dense index lists.
std::vector<std::vector<std::uint32_t>> components(const std::vector<std::vector<std::uint32_t>>& adj,
                                                   const std::vector<char>& active) {
  const std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!active[s] || seen[s]) continue;
    auto& comp = out.emplace_back();
    seen[s] = 1;
    comp.push_back(s);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto w : adj[comp[i]]) {
        if (active[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
  }
  return out;
}

}  // namespace

Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool EdgeRelation::adjacent(VertexId a, VertexId b) const {
  return a != b && edges.contains(make_edge(a, b));
}

std::vector<std::vector<std::uint32_t>> EdgeRelation::dense_adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    const auto iu = dense_index(*this, u);
    const auto iv = dense_index(*this, v);
    adj[iu].push_back(iv);
    adj[iv].push_back(iu);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::size_t EdgeRelation::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : dense_adjacency()) best = std::max(best, row.size());
  return best;
}

EdgeRelation to_edge_relation(const MultiTraversalRelation& g) {
  EdgeRelation e;
  e.vertices.assign(g.vertices().begin(), g.vertices().end());
  for (const auto& wa : g.arcs()) {
    if (!wa.arc.is_self_loop()) e.edges.insert(make_edge(wa.arc.tail, wa.arc.head));
  }
  return e;
}

const EdgeSubgraph& Opers::subgraph_of(VertexId root) const {
  for (const auto& s : subgraphs) {
    if (s.root == root) return s;
  }
  throw DomainError("no subgraph rooted at " + std::to_string(root.value));
}

std::size_t Opers::non_empty_count() const {
  return static_cast<std::size_t>(std::count_if(
      subgraphs.begin(), subgraphs.end(), [](const EdgeSubgraph& s) { return !s.leaves.empty(); }));
}

Opers build_opers(const EdgeRelation& e, std::span<const VertexId> order) {
  std::vector<VertexId> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != e.vertices) throw DomainError("root order is not a permutation of the vertex set");

  const std::size_t n = e.vertices.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[dense_index(e, order[i])] = i;

  Opers o;
  o.roots_order.assign(order.begin(), order.end());
  o.subgraphs.resize(n);
  for (std::size_t i = 0; i < n; ++i) o.subgraphs[i].root = order[i];
  for (const auto& [u, v] : e.edges) {
    const auto pu = pos[dense_index(e, u)];
    const auto pv = pos[dense_index(e, v)];
    if (pu < pv) {
      o.subgraphs[pu].leaves.insert(v);
    } else {
      o.subgraphs[pv].leaves.insert(u);
    }
  }
  for (const auto& s : o.subgraphs) {
    if (s.leaves.empty()) o.empty_set.push_back(s.root);
  }
  return o;
}

Coloring Coloring::from_assignment(const std::map<VertexId, std::uint32_t>& raw) {
  std::set<std::uint32_t> used;
  for (const auto& [v, c] : raw) {
    if (c == 0) throw DomainError("colors are 1-based");
    used.insert(c);
  }
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto c : used) renumber.emplace(c, static_cast<std::uint32_t>(renumber.size() + 1));

  Coloring out;
  for (const auto& [v, c] : raw) {
    const auto nc = renumber.at(c);
    out.assignment.emplace(v, nc);
    out.classes[nc].push_back(v);
  }
  out.k = static_cast<std::uint32_t>(used.size());
  return out;
}

Coloring bogpc(const MultiTraversalRelation& g, std::uint64_t seed) {
  Rng rng(seed);
  const EdgeRelation e = to_edge_relation(g);
  const auto adj = e.dense_adjacency();
  const std::size_t n = e.vertices.size();

  std::map<VertexId, std::uint32_t> raw;
  std::vector<char> active(n, 1);
  std::size_t remaining = n;
  std::uint32_t color = 0;

  while (remaining > 0) {
    ++color;
    // Random root order over the uncolored subgraph; its empty-subgraph set
    // holds the vertices whose uncolored neighbours all come earlier.
    std::vector<std::uint32_t> order;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (active[v]) order.push_back(v);
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

    std::vector<std::uint32_t> cls;
    std::vector<char> in_class(n, 0);
    for (const auto& comp : components(adj, active)) {
      std::vector<std::uint32_t> empty_members;
      for (auto v : comp) {
        const bool last = std::none_of(adj[v].begin(), adj[v].end(), [&](std::uint32_t w) {
          return active[w] && pos[w] > pos[v];
        });
        if (last) empty_members.push_back(v);
      }
      const auto s = pick(empty_members, rng);
      cls.push_back(s);
      in_class[s] = 1;
    }

    while (cls.size() < remaining) {
      const auto layers = detail::layer_dense(adj, cls, active);
      if (layers.regions.size() < 3) break;
      auto sigma3 = layers.regions[2];
      std::shuffle(sigma3.begin(), sigma3.end(), rng);
      bool grew = false;
      for (auto v : sigma3) {
        const bool free = std::none_of(adj[v].begin(), adj[v].end(),
                                       [&](std::uint32_t w) { return in_class[w] != 0; });
        if (free) {
          cls.push_back(v);
          in_class[v] = 1;
          grew = true;
        }
      }
      if (!grew) break;
    }

    for (auto v : cls) {
      raw.emplace(e.vertices[v], color);
      active[v] = 0;
    }
    remaining -= cls.size();
  }
  return Coloring::from_assignment(raw);
}

Coloring boerc_with_order(const MultiTraversalRelation& g, std::span<const VertexId> order,
                          std::uint64_t seed) {
  Rng rng(seed);
  const EdgeRelation e = to_edge_relation(g);
  const Opers opers = build_opers(e, order);

  std::map<VertexId, std::set<std::uint32_t>> forbidden;
  std::map<VertexId, std::uint32_t> raw;
  std::uint32_t palette = 2;
  for (const auto& sub : opers.subgraphs) {
    const auto& omega = forbidden[sub.root];
    std::vector<std::uint32_t> free;
    for (std::uint32_t c = 1; c <= palette; ++c) {
      if (!omega.contains(c)) free.push_back(c);
    }
    std::uint32_t c;
    if (free.empty()) {
      c = ++palette;
    } else {
      c = pick(free, rng);
    }
    raw.emplace(sub.root, c);
    for (auto leaf : sub.leaves) forbidden[leaf].insert(c);
  }
  return Coloring::from_assignment(raw);
}

Coloring boerc(const MultiTraversalRelation& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::shuffle(order.begin(), order.end(), rng);
  return boerc_with_order(g, order, rng());
}

bool verify_coloring(const MultiTraversalRelation& g, const Coloring& c) {
  for (auto v : g.vertices()) {
    if (!c.assignment.contains(v)) {
      throw DomainError("vertex " + std::to_string(v.value) + " has no color");
    }
  }
  for (const auto& [u, v] : to_edge_relation(g).edges) {
    if (c.assignment.at(u) == c.assignment.at(v)) return false;
  }
  return true;
}

bool is_civs(const EdgeRelation& e, std::span<const VertexId> s) {
  if (s.size() < 2) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || e.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace relgraph
