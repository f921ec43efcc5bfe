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

#include "relgraph/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "relgraph/bocps.hpp"
#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

__extension__ using Wide = unsigned __int128;

bool chained_without_loops(std::span<const Arc> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_self_loop()) return false;
    if (i + 1 < s.size() && s[i].head != s[i + 1].tail) return false;
  }
  return true;
}

}  // namespace

ArcSequence to_arc_sequence(std::span<const VertexId> vertices) {
  ArcSequence out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(Arc{vertices[i], vertices[i + 1]});
  return out;
}

bool is_trail(std::span<const Arc> s) { return s.size() > 1 && chained_without_loops(s); }

bool is_path(std::span<const Arc> s) {
  if (s.empty() || !chained_without_loops(s)) return false;
  if (s.size() == 1) return true;

  // Vertex sequence x_0 .. x_N; only x_0 == x_N may coincide.
  std::vector<VertexId> seq;
  seq.reserve(s.size() + 1);
  seq.push_back(s.front().tail);
  for (const auto& a : s) seq.push_back(a.head);
  const bool closed = seq.front() == seq.back();
  if (closed) seq.pop_back();
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

bool is_cycle(std::span<const Arc> s) {
  return s.size() >= 2 && is_path(s) && s.front().tail == s.back().head;
}

std::vector<VertexId> medium_vertices(std::span<const Arc> s) {
  if (!is_path(s)) throw DomainError("medium vertices need a path");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out.push_back(s[i].head);
  return out;
}

ArcSequence cycle_permute(std::span<const Arc> s, const CyclePermutation& p) {
  if (!is_cycle(s)) throw DomainError("cycle permutation needs a cycle");
  if (p.index > s.size()) throw DomainError("permutation index exceeds cycle length");
  ArcSequence out(s.begin(), s.end());
  const std::size_t n = out.size();
  // (alpha_2, alpha_1) once is a left rotation by the prefix length.
  const std::size_t shift = static_cast<std::size_t>(
      (static_cast<Wide>(p.index % n) * p.power) % n);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return out;
}

std::size_t minimal_power(std::size_t cycle_length, std::size_t index) {
  if (index < 1 || index > cycle_length) {
    throw DomainError("minimal power needs 1 <= m <= N");
  }
  if (index == cycle_length) return 1;
  return cycle_length / std::gcd(cycle_length, index);
}

std::size_t minimal_power_by_bocps(std::size_t cycle_length, std::size_t index) {
  if (index < 1 || index > cycle_length) {
    throw DomainError("minimal power needs 1 <= m <= N");
  }
  if (index == cycle_length) return 1;
  const auto r = bocps(static_cast<std::int64_t>(index),
                       static_cast<std::int64_t>(cycle_length - index));
  return static_cast<std::size_t>(r.k1 + r.k2);
}

std::vector<ArcSequence> chains_of(std::span<const Arc> s) {
  if (!is_cycle(s)) throw DomainError("chains need a cycle");
  std::set<ArcSequence> seen;
  std::vector<ArcSequence> out;
  for (std::size_t r = 0; r < s.size(); ++r) {
    ArcSequence chain = cycle_permute(s, {r, 1});
    chain.pop_back();
    if (seen.insert(chain).second) out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace relgraph
