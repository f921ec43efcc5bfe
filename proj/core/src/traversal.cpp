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

#include "relgraph/traversal.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

std::uint32_t require_start(const MultiTraversalRelation& g, VertexId start) {
  const auto idx = g.index_of(start);
  if (!idx) throw DomainError("start vertex " + std::to_string(start.value) + " not in relation");
  return *idx;
}

/// Accumulates maximal paths for one work unit.
class Collector {
 public:
  Collector(const MultiTraversalRelation& g, std::uint32_t start, const TraversalOptions& options,
            std::mutex* sink_mutex)
      : g_(&g), options_(&options), sink_mutex_(sink_mutex) {
    closes_.assign(g.vertex_count(), 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (v == start) continue;
      for (const auto& a : g.out_arcs(v)) {
        if (a.vertex == start) closes_[v] = 1;
      }
    }
  }

  /// `distinct` is the number of different vertices on `path`.
  void emit(std::span<const std::uint32_t> path, std::size_t distinct) {
    ++breadth_;
    const std::size_t n = g_->vertex_count();
    if (path.size() == n && distinct == n) {
      ++hamilton_.hamiltonian_paths;
      if (closes_[path.back()]) ++hamilton_.hamiltonian_cycles;
    }
    if (!options_->retain_paths && !options_->sink) return;
    scratch_.clear();
    for (auto v : path) scratch_.push_back(g_->vertex_at(v));
    if (options_->sink) {
      if (sink_mutex_ != nullptr) {
        std::lock_guard lock(*sink_mutex_);
        options_->sink(scratch_);
      } else {
        options_->sink(scratch_);
      }
    }
    if (options_->retain_paths) paths_.push_back(SearchPath{scratch_});
  }

  void merge_into(TraversalResult& r) {
    r.breadth += breadth_;
    r.hamilton.hamiltonian_paths += hamilton_.hamiltonian_paths;
    r.hamilton.hamiltonian_cycles += hamilton_.hamiltonian_cycles;
    if (options_->retain_paths) {
      std::move(paths_.begin(), paths_.end(), std::back_inserter(r.paths));
      paths_.clear();
    }
  }

 private:
  const MultiTraversalRelation* g_;
  const TraversalOptions* options_;
  std::mutex* sink_mutex_;
  std::vector<char> closes_;
  std::vector<VertexId> scratch_;
  std::vector<SearchPath> paths_;
  std::uint64_t breadth_ = 0;
  HamiltonStats hamilton_;
};

std::size_t count_distinct(std::span<const std::uint32_t> path, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t distinct = 0;
  for (auto v : path) {
    if (!seen[v]) {
      seen[v] = 1;
      ++distinct;
    }
  }
  return distinct;
}

/// Leaves of `v` still admissible given the occurrence counts, ascending.
template <typename Visit>
void for_each_admissible(const MultiTraversalRelation& g, std::uint32_t v,
                         const std::vector<std::uint32_t>& occ, Visit&& visit) {
  for (const auto& a : g.out_arcs(v)) {
    if (a.vertex != v && a.weight > occ[a.vertex]) visit(a.vertex);
  }
}

/// Depth-first OBOTS over the subtree rooted at `prefix`. The stack holds
/// (depth, vertex) pairs; popping one truncates the current path to `depth`
/// and appends the vertex, which is the same as popping the stored path.
std::uint64_t obots_subtree(const MultiTraversalRelation& g,
                            std::span<const std::uint32_t> prefix, Collector& out) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> occ(n, 0);
  std::size_t distinct = 0;
  std::vector<std::uint32_t> path;
  path.reserve(64);
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    path.push_back(prefix[i]);
    if (occ[prefix[i]]++ == 0) ++distinct;
  }

  struct Pending {
    std::uint32_t depth;
    std::uint32_t vertex;
  };
  std::vector<Pending> stack{{static_cast<std::uint32_t>(prefix.size() - 1), prefix.back()}};
  std::vector<std::uint32_t> admissible;
  std::uint64_t loops = 0;

  while (!stack.empty()) {
    const Pending top = stack.back();
    stack.pop_back();
    while (path.size() > top.depth) {
      if (--occ[path.back()] == 0) --distinct;
      path.pop_back();
    }
    path.push_back(top.vertex);
    if (occ[top.vertex]++ == 0) ++distinct;
    ++loops;

    admissible.clear();
    for_each_admissible(g, top.vertex, occ, [&](std::uint32_t w) { admissible.push_back(w); });
    if (admissible.empty()) {
      out.emit(path, distinct);
      continue;
    }
    const auto depth = static_cast<std::uint32_t>(path.size());
    // Pushed descending so the smallest leaf is expanded first.
    for (auto it = admissible.rbegin(); it != admissible.rend(); ++it) {
      stack.push_back({depth, *it});
    }
  }
  return loops;
}

void obots_parallel(const MultiTraversalRelation& g, std::uint32_t start,
                    const TraversalOptions& options, TraversalResult& result) {
  std::mutex sink_mutex;
  Collector head(g, start, options, &sink_mutex);

  // Breadth-first split until there are enough independent subtrees.
  const std::size_t target = static_cast<std::size_t>(options.threads) * 16;
  std::deque<std::vector<std::uint32_t>> frontier{{start}};
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> occ(n, 0);
  while (!frontier.empty() && frontier.size() < target) {
    auto path = std::move(frontier.front());
    frontier.pop_front();
    ++result.loop_count;
    std::fill(occ.begin(), occ.end(), 0);
    for (auto v : path) ++occ[v];
    bool extended = false;
    for_each_admissible(g, path.back(), occ, [&](std::uint32_t w) {
      auto child = path;
      child.push_back(w);
      frontier.push_back(std::move(child));
      extended = true;
    });
    if (!extended) head.emit(path, count_distinct(path, n));
  }
  head.merge_into(result);

  std::vector<std::vector<std::uint32_t>> units(std::make_move_iterator(frontier.begin()),
                                                std::make_move_iterator(frontier.end()));
  std::vector<Collector> collectors;
  collectors.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) collectors.emplace_back(g, start, options, &sink_mutex);
  std::vector<std::uint64_t> loops(units.size(), 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      loops[i] = obots_subtree(g, units[i], collectors[i]);
    }
  };
  const std::size_t workers = std::min<std::size_t>(options.threads, units.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < units.size(); ++i) {
    result.loop_count += loops[i];
    collectors[i].merge_into(result);
  }
}

}  // namespace

std::map<VertexId, std::uint32_t> SearchPath::occurrence() const {
  std::map<VertexId, std::uint32_t> occ;
  for (auto v : vertices) ++occ[v];
  return occ;
}

bool characteristic(const MultiTraversalRelation& g, VertexId u, VertexId v) {
  return g.weight(u, v) > 0;
}

MultipleVisitingSet equivalent_visit(const MultipleVisitingSet& nu) {
  MultipleVisitingSet out = nu;
  for (auto& [source, w] : out.sources) {
    if (w > 0) --w;
  }
  return out;
}

std::vector<VertexId> enumerate_next(const WeightedUnitSubgraph& subgraph,
                                     std::span<const VertexId> path) {
  if (path.empty() || path.back() != subgraph.root) {
    throw DomainError("unit subgraph root is not the end of the path");
  }
  std::vector<VertexId> out;
  for (const auto& [leaf, w] : subgraph.leaves) {
    if (leaf == subgraph.root) continue;
    const auto k = static_cast<Multiplicity>(std::count(path.begin(), path.end(), leaf));
    if (w > k) out.push_back(leaf);
  }
  return out;
}

ResidualTable::ResidualTable(const MultiTraversalRelation& g) : g_(&g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  row_offset_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    row_offset_[v + 1] = row_offset_[v] + static_cast<std::uint32_t>(g.out_arcs(v).size());
  }
  reset();
}

void ResidualTable::reset() {
  residual_.resize(row_offset_.back());
  for (std::uint32_t v = 0; v + 1 < row_offset_.size(); ++v) {
    const auto row = g_->out_arcs(v);
    for (std::size_t j = 0; j < row.size(); ++j) residual_[row_offset_[v] + j] = row[j].weight;
  }
}

void ResidualTable::equivalent_visit_dense(std::uint32_t head) {
  for (const auto& in : g_->in_arcs(head)) {
    const auto row = g_->out_arcs(in.vertex);
    auto it = std::lower_bound(row.begin(), row.end(), head,
                               [](const DenseArc& a, std::uint32_t key) { return a.vertex < key; });
    auto& w = residual_[row_offset_[in.vertex] + static_cast<std::uint32_t>(it - row.begin())];
    if (w > 0) --w;
  }
}

void ResidualTable::enumerate_next_dense(std::uint32_t root,
                                         std::vector<std::uint32_t>& out) const {
  out.clear();
  const auto row = g_->out_arcs(root);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].vertex != root && residual_[row_offset_[root] + j] > 0) out.push_back(row[j].vertex);
  }
}

void ResidualTable::equivalent_visit(VertexId head) {
  const auto idx = g_->index_of(head);
  if (!idx) throw DomainError("vertex not in relation");
  equivalent_visit_dense(*idx);
}

bool ResidualTable::characteristic(VertexId u, VertexId v) const {
  const auto ui = g_->index_of(u);
  const auto vi = g_->index_of(v);
  if (!ui || !vi) return false;
  const auto row = g_->out_arcs(*ui);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].vertex == *vi) return residual_[row_offset_[*ui] + j] > 0;
  }
  return false;
}

std::vector<VertexId> ResidualTable::enumerate_next(VertexId root) const {
  const auto idx = g_->index_of(root);
  if (!idx) throw DomainError("vertex not in relation");
  std::vector<std::uint32_t> dense;
  enumerate_next_dense(*idx, dense);
  std::vector<VertexId> out;
  out.reserve(dense.size());
  for (auto v : dense) out.push_back(g_->vertex_at(v));
  return out;
}

TraversalResult bots_search(const MultiTraversalRelation& g, VertexId start,
                            const TraversalOptions& options) {
  const auto s = require_start(g, start);
  TraversalResult result;
  result.paths_retained = options.retain_paths;
  result.disconnected = !is_connected(g);

  Collector out(g, s, options, nullptr);
  ResidualTable table(g);
  std::vector<std::vector<std::uint32_t>> stack{{s}};
  std::vector<std::uint32_t> next;
  const std::size_t n = g.vertex_count();

  while (!stack.empty()) {
    std::vector<std::uint32_t> path = std::move(stack.back());
    stack.pop_back();
    ++result.loop_count;

    table.reset();
    for (auto v : path) table.equivalent_visit_dense(v);
    table.enumerate_next_dense(path.back(), next);

    if (next.empty()) {
      out.emit(path, count_distinct(path, n));
      continue;
    }
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      auto child = path;
      child.push_back(*it);
      stack.push_back(std::move(child));
    }
  }
  out.merge_into(result);
  return result;
}

TraversalResult obots_search(const MultiTraversalRelation& g, VertexId start,
                             const TraversalOptions& options) {
  const auto s = require_start(g, start);
  TraversalResult result;
  result.paths_retained = options.retain_paths;
  result.disconnected = !is_connected(g);

  if (options.threads > 1) {
    obots_parallel(g, s, options, result);
    return result;
  }
  Collector out(g, s, options, nullptr);
  const std::uint32_t root[] = {s};
  result.loop_count = obots_subtree(g, root, out);
  out.merge_into(result);
  return result;
}

HamiltonStats hamilton_stats(const TraversalResult& r, const MultiTraversalRelation& g,
                             VertexId start) {
  if (!r.paths_retained) throw DomainError("traversal result did not retain its paths");
  HamiltonStats stats;
  const std::size_t n = g.vertex_count();
  for (const auto& p : r.paths) {
    if (p.vertices.size() != n) continue;
    auto sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    ++stats.hamiltonian_paths;
    const VertexId last = p.vertices.back();
    if (last != start && g.weight(last, start) > 0) ++stats.hamiltonian_cycles;
  }
  return stats;
}

std::map<VertexId, std::uint64_t> traversal_invariant(const MultiTraversalRelation& g,
                                                      unsigned threads) {
  if (classify(g) != GraphClass::kSimple) {
    throw DomainError("traversal invariant needs a Simple relation, got " +
                      std::string(to_string(classify(g))));
  }
  if (!is_connected(g)) throw DomainError("traversal invariant needs a connected relation");
  TraversalOptions options;
  options.retain_paths = false;
  options.threads = threads;
  std::map<VertexId, std::uint64_t> counts;
  for (auto v : g.vertices()) {
    counts[v] = obots_search(g, v, options).hamilton.hamiltonian_cycles;
  }
  return counts;
}

}  // namespace relgraph
