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

#include <filesystem>
#include <string>
#include <string_view>

#include "relgraph/relation.hpp"

namespace relgraph {

struct ParseOptions {
  /// Mirror every arc (reverse with equal weight) before summing duplicates.
  bool undirected = false;
};

/// Reads the arc-list format: one `tail head [weight]` per line, `#` comments,
/// blank lines ignored, duplicate (tail, head) lines summed.
///
/// Throws ParseError for a line that is not 2-3 integer tokens, DomainError
/// for a non-positive id or weight, or for a document with no arcs.
MultiTraversalRelation parse_graph(std::string_view text, const ParseOptions& options = {});

/// Writes one line per distinct arc in (tail, head) order; the weight column
/// is omitted when it is 1.
std::string serialize_graph(const MultiTraversalRelation& g);

MultiTraversalRelation load_graph_file(const std::filesystem::path& path,
                                       const ParseOptions& options = {});
void save_graph_file(const std::filesystem::path& path, const MultiTraversalRelation& g);

}  // namespace relgraph
