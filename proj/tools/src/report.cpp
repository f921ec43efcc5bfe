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

#include "relgraph_cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace relgraph::cli {

std::string format_ratio(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << value;
  return s.str();
}

namespace {

bool has_gap(const ExperimentReport& report) {
  return std::any_of(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& r) { return r.euler_gap.has_value(); });
}

}  // namespace

void write_tsv(std::ostream& out, const ExperimentReport& report) {
  const bool gap = has_gap(report);
  out << "label\tloop_count\tbreadth\tratio\thp\thc";
  if (gap) out << "\tgap_to_e";
  if (report.include_time) out << "\twall_time_s";
  out << '\n';
  for (const auto& r : report.rows) {
    out << r.label << '\t' << r.loop_count << '\t' << r.breadth << '\t' << format_ratio(r.ratio)
        << '\t' << r.hamiltonian_paths << '\t' << r.hamiltonian_cycles;
    if (gap) {
      std::ostringstream g;
      g << std::scientific << std::setprecision(3) << r.euler_gap.value_or(0.0);
      out << '\t' << g.str();
    }
    if (report.include_time) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(6) << r.wall_seconds;
      out << '\t' << t.str();
    }
    out << '\n';
  }
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {
        {"label", r.label},
        {"loop_count", r.loop_count},
        {"breadth", r.breadth},
        {"ratio", r.ratio},
        {"hamiltonian_paths", r.hamiltonian_paths},
        {"hamiltonian_cycles", r.hamiltonian_cycles},
    };
    if (r.euler_gap) row["gap_to_e"] = *r.euler_gap;
    if (report.include_time) row["wall_time_s"] = r.wall_seconds;
    rows.push_back(std::move(row));
  }
  return {{"command", report.command}, {"params", report.params}, {"rows", std::move(rows)}};
}

}  // namespace relgraph::cli
