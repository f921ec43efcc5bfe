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

#include "relgraph/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "relgraph/errors.hpp"

namespace relgraph {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint32_t parse_positive(std::string_view token, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw DomainError("line " + std::to_string(line_no) + ": " + what + " out of range");
  }
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  if (value <= 0) {
    throw DomainError("line " + std::to_string(line_no) + ": " + what + " must be positive");
  }
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("line " + std::to_string(line_no) + ": " + what + " out of range");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

MultiTraversalRelation parse_graph(std::string_view text, const ParseOptions& options) {
  RelationBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected 'tail head [weight]', got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    const VertexId tail{parse_positive(tokens[0], line_no, "vertex id")};
    const VertexId head{parse_positive(tokens[1], line_no, "vertex id")};
    const Multiplicity w =
        tokens.size() == 3 ? parse_positive(tokens[2], line_no, "multiplicity") : 1;
    builder.add(tail, head, w);
    if (options.undirected && tail != head) builder.add(head, tail, w);
  }
  return builder.build();
}

std::string serialize_graph(const MultiTraversalRelation& g) {
  std::ostringstream os;
  os << "# vertices " << g.vertex_count() << ", arcs " << g.arc_count() << '\n';
  for (const auto& a : g.arcs()) {
    os << a.arc.tail << ' ' << a.arc.head;
    if (a.weight != 1) os << ' ' << a.weight;
    os << '\n';
  }
  return os.str();
}

MultiTraversalRelation load_graph_file(const std::filesystem::path& path,
                                       const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open graph file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), options);
}

void save_graph_file(const std::filesystem::path& path, const MultiTraversalRelation& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write graph file: " + path.string());
  out << serialize_graph(g);
}

}  // namespace relgraph
