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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace relgraph::cli {

struct ReportRow {
  std::string label;
  std::uint64_t loop_count = 0;
  std::uint64_t breadth = 0;
  double ratio = 0.0;
  std::uint64_t hamiltonian_paths = 0;
  std::uint64_t hamiltonian_cycles = 0;
  double wall_seconds = 0.0;
  /// |ratio - e|, filled by the euler experiment only.
  std::optional<double> euler_gap;
};

/// Rows of a traversal experiment plus the parameters that produced them.
struct ExperimentReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<ReportRow> rows;
  /// Wall time is left out unless requested so repeated runs print identical bytes.
  bool include_time = false;
};

/// Header line plus one line per row. Ratios print with 9 decimals.
void write_tsv(std::ostream& out, const ExperimentReport& report);

nlohmann::json to_json(const ExperimentReport& report);

std::string format_ratio(double value);

}  // namespace relgraph::cli
