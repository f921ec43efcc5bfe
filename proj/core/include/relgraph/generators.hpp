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

#include "relgraph/relation.hpp"

namespace relgraph {

/// All ordered pairs (i, j), i != j, on vertices 1..n. Requires n >= 2.
MultiTraversalRelation gen_complete(std::size_t n);

/// Symmetric cycle 1-2-...-n-1. Requires n >= 3.
MultiTraversalRelation gen_cycle(std::size_t n);

/// Directed path 1->2->...->n. Requires n >= 2.
MultiTraversalRelation gen_path(std::size_t n);

/// Symmetric rows x cols lattice; vertex (r, c) is r * cols + c + 1.
/// Requires rows, cols >= 1 and rows * cols >= 2.
MultiTraversalRelation gen_grid(std::size_t rows, std::size_t cols);

/// A stack of z concentric rings. The first and last rings carry k vertices,
/// each of the z - 2 middle rings carries 2k. Within a middle ring, even
/// positions link to the ring before and odd positions to the ring after, so
/// every vertex has degree 3 and n = 2 (z - 1) k.
///
/// Labels run ring by ring in ring order: the first ring is 1..k, then each
/// middle ring, then the last ring. Requires k >= 3, z >= 2.
MultiTraversalRelation gen_cycle_sequence(std::size_t k, std::size_t z);

/// The regular dodecahedron: outer ring 1-5, middle ring 6-15, inner ring
/// 16-20. Same labeling as gen_cycle_sequence(5, 3).
MultiTraversalRelation gen_dodecahedron();

}  // namespace relgraph
