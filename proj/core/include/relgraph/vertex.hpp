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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace relgraph {

/// A 1-based vertex label. Labels within one instance are unique but need not
/// be contiguous.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << v.value;
}

/// Arc multiplicity (the weight of an ordered pair in a multiple relation).
using Multiplicity = std::uint32_t;

/// Ordered pair (tail, head). Self-loops are representable.
struct Arc {
  VertexId tail;
  VertexId head;

  [[nodiscard]] constexpr bool is_self_loop() const { return tail == head; }
  [[nodiscard]] constexpr Arc reversed() const { return Arc{head, tail}; }

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Arc& a) {
  return os << '(' << a.tail << ',' << a.head << ')';
}

namespace literals {
constexpr VertexId operator""_v(unsigned long long v) {
  return VertexId{static_cast<std::uint32_t>(v)};
}
}  // namespace literals

}  // namespace relgraph

template <>
struct std::hash<relgraph::VertexId> {
  std::size_t operator()(relgraph::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
