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
#include <span>
#include <vector>

#include "relgraph/vertex.hpp"

namespace relgraph {

using ArcSequence = std::vector<Arc>;

/// Rotation that moves a prefix of `index` arcs behind the rest, applied
/// `power` times.
struct CyclePermutation {
  std::size_t index = 0;
  std::size_t power = 0;
};

/// Consecutive vertex pairs of `vertices` as arcs.
ArcSequence to_arc_sequence(std::span<const VertexId> vertices);

/// At least two arcs, no self-loop, each head equal to the next tail.
bool is_trail(std::span<const Arc> s);

/// A single non-loop arc, or a trail whose vertex sequence repeats no vertex
/// except that the first tail may equal the last head.
///
/// The set-builder form of the definition (a vertex lying in the
/// intersection over one or two consecutive arcs) is read through its
/// consequences: medium vertices are pairwise distinct and the only allowed
/// coincidence is closure.
bool is_path(std::span<const Arc> s);

/// A path of length >= 2 whose first tail equals its last head.
bool is_cycle(std::span<const Arc> s);

/// Heads of every arc but the last. Throws DomainError unless is_path(s).
std::vector<VertexId> medium_vertices(std::span<const Arc> s);

/// Rotates a cycle left by p.index, p.power times. Throws DomainError unless
/// is_cycle(s) and p.index <= s.size().
ArcSequence cycle_permute(std::span<const Arc> s, const CyclePermutation& p);

/// Least M >= 1 with rho_m^M equal to the identity on a length-N cycle:
/// N / gcd(N, m) for m < N and 1 for m = N. Requires 1 <= m <= N.
std::size_t minimal_power(std::size_t cycle_length, std::size_t index);

/// Same quantity computed by the BOCPS return-time search on (m, N - m).
std::size_t minimal_power_by_bocps(std::size_t cycle_length, std::size_t index);

/// Distinct chains: every rotation of the cycle with its final arc dropped.
/// Throws DomainError unless is_cycle(s).
std::vector<ArcSequence> chains_of(std::span<const Arc> s);

}  // namespace relgraph
