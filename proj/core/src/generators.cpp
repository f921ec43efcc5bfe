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

#include "relgraph/generators.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

constexpr std::size_t kMaxVertices = std::numeric_limits<std::uint32_t>::max() / 4;

VertexId label(std::size_t one_based) {
  return VertexId{static_cast<std::uint32_t>(one_based)};
}

void check_size(std::size_t n) {
  if (n > kMaxVertices) throw DomainError("instance too large: " + std::to_string(n));
}

}  // namespace

MultiTraversalRelation gen_complete(std::size_t n) {
  if (n < 2) throw DomainError("complete graph needs n >= 2");
  check_size(n);
  RelationBuilder b;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) b.add(label(i), label(j));
  return b.build();
}

MultiTraversalRelation gen_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  check_size(n);
  RelationBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_edge(label(i), label(i % n + 1));
  return b.build();
}

MultiTraversalRelation gen_path(std::size_t n) {
  if (n < 2) throw DomainError("path needs n >= 2");
  check_size(n);
  RelationBuilder b;
  for (std::size_t i = 1; i < n; ++i) b.add(label(i), label(i + 1));
  return b.build();
}

MultiTraversalRelation gen_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows * cols < 2)
    throw DomainError("grid needs rows, cols >= 1 and rows * cols >= 2");
  check_size(rows * cols);
  RelationBuilder b;
  auto at = [cols](std::size_t r, std::size_t c) { return label(r * cols + c + 1); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows) b.add_edge(at(r, c), at(r + 1, c));
    }
  }
  return b.build();
}

MultiTraversalRelation gen_cycle_sequence(std::size_t k, std::size_t z) {
  if (k < 3) throw DomainError("cycle sequence needs k >= 3");
  if (z < 2) throw DomainError("cycle sequence needs z >= 2");
  check_size(2 * (z - 1) * k);

  // ring_start[r] is the first label of ring r; sizes are k, 2k, ..., 2k, k.
  std::vector<std::size_t> ring_size(z, 2 * k);
  ring_size.front() = k;
  ring_size.back() = k;
  std::vector<std::size_t> ring_start(z, 1);
  for (std::size_t r = 1; r < z; ++r) ring_start[r] = ring_start[r - 1] + ring_size[r - 1];

  RelationBuilder b;
  for (std::size_t r = 0; r < z; ++r) {
    const std::size_t s = ring_size[r];
    for (std::size_t i = 0; i < s; ++i) {
      b.add_edge(label(ring_start[r] + i), label(ring_start[r] + (i + 1) % s));
    }
  }

  // Spoke i joins position `up` of ring r to position `down` of ring r + 1.
  for (std::size_t r = 0; r + 1 < z; ++r) {
    const bool from_end_ring = (r == 0);
    const bool to_end_ring = (r + 1 == z - 1);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t up = from_end_ring ? i : 2 * i + 1;
      const std::size_t down = to_end_ring ? i : 2 * i;
      b.add_edge(label(ring_start[r] + up), label(ring_start[r + 1] + down));
    }
  }
  return b.build();
}

MultiTraversalRelation gen_dodecahedron() { return gen_cycle_sequence(5, 3); }

}  // namespace relgraph
