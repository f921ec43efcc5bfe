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

#include "relgraph_cli/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relgraph/bocps.hpp"
#include "relgraph/coloring.hpp"
#include "relgraph/errors.hpp"
#include "relgraph/generators.hpp"
#include "relgraph/graph_io.hpp"
#include "relgraph/partition.hpp"
#include "relgraph/sequences.hpp"
#include "relgraph/traversal.hpp"
#include "relgraph_cli/report.hpp"

namespace relgraph::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kEulerGuard = 9;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool undirected = false;
  bool force = false;
  bool time = false;
};

/// Thrown for well-formed command lines whose arguments are unusable.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Commands {
 public:
  Commands(const Globals& globals, std::ostream& out) : g_(globals), out_(out) {}

  // gen ---------------------------------------------------------------------
  std::string family;
  std::vector<std::size_t> gen_params;
  std::string gen_output;

  void gen() {
    const auto need = [&](std::size_t count) {
      if (gen_params.size() != count) {
        throw UsageError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
      }
    };
    std::optional<MultiTraversalRelation> g;
    try {
      if (family == "complete") {
        need(1);
        g = gen_complete(gen_params[0]);
      } else if (family == "cycle") {
        need(1);
        g = gen_cycle(gen_params[0]);
      } else if (family == "path") {
        need(1);
        g = gen_path(gen_params[0]);
      } else if (family == "grid") {
        need(2);
        g = gen_grid(gen_params[0], gen_params[1]);
      } else if (family == "cycleseq") {
        need(2);
        g = gen_cycle_sequence(gen_params[0], gen_params[1]);
      } else {
        need(0);
        g = gen_dodecahedron();
      }
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (gen_output.empty()) {
      out_ << serialize_graph(*g);
    } else {
      save_graph_file(gen_output, *g);
    }
  }

  // shared file input ---------------------------------------------------------
  std::string file;

  MultiTraversalRelation load() const {
    return load_graph_file(file, {.undirected = g_.undirected});
  }

  // classify ----------------------------------------------------------------
  void classify() {
    const auto g = load();
    const auto cls = to_string(relgraph::classify(g));
    const bool connected = is_connected(g);
    if (g_.json) {
      out_ << json{{"command", "classify"},
                   {"params", {{"file", file}}},
                   {"class", cls},
                   {"vertices", g.vertex_count()},
                   {"arcs", g.arc_count()},
                   {"total_multiplicity", g.total_multiplicity()},
                   {"self_loops", g.has_self_loops()},
                   {"connected", connected}}
                  .dump(2)
           << '\n';
      return;
    }
    out_ << "class\t" << cls << "\nvertices\t" << g.vertex_count() << "\narcs\t" << g.arc_count()
         << "\ntotal_multiplicity\t" << g.total_multiplicity() << "\nself_loops\t"
         << (g.has_self_loops() ? "yes" : "no") << "\nconnected\t" << (connected ? "yes" : "no")
         << '\n';
  }

  // traverse ----------------------------------------------------------------
  std::string algo = "obots";
  std::optional<std::uint32_t> start;
  bool print_paths = false;

  void traverse() {
    const auto g = load();
    const VertexId s = start ? VertexId{*start} : g.vertices().front();
    ExperimentReport report;
    report.command = "traverse";
    report.include_time = g_.time;
    report.params = {{"file", file}, {"algo", algo}, {"start", s.value}, {"threads", g_.threads}};

    TraversalOptions opts{.retain_paths = print_paths, .sink = {}, .threads = g_.threads};
    const auto t0 = std::chrono::steady_clock::now();
    const TraversalResult r = algo == "bots" ? bots_search(g, s, opts) : obots_search(g, s, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    report.rows.push_back(row_of(std::filesystem::path(file).filename().string(), r, secs));
    if (g_.json) {
      json doc = to_json(report);
      doc["disconnected"] = r.disconnected;
      if (print_paths) {
        json paths = json::array();
        for (const auto& p : r.paths) {
          json ids = json::array();
          for (auto v : p.vertices) ids.push_back(v.value);
          paths.push_back(std::move(ids));
        }
        doc["paths"] = std::move(paths);
      }
      out_ << doc.dump(2) << '\n';
      return;
    }
    write_tsv(out_, report);
    if (print_paths) {
      for (const auto& p : r.paths) {
        out_ << "path";
        for (auto v : p.vertices) out_ << '\t' << v.value;
        out_ << '\n';
      }
    }
  }

  // euler -------------------------------------------------------------------
  std::size_t n_max = kEulerGuard;

  void euler() {
    if (n_max < 3) throw UsageError("--n-max must be at least 3");
    if (n_max > kEulerGuard && !g_.force) {
      throw SizeRefusal("complete-graph runs above n = " + std::to_string(kEulerGuard) +
                        " need --force");
    }
    ExperimentReport report;
    report.command = "euler";
    report.include_time = g_.time;
    report.params = {{"n_max", n_max}, {"algo", algo}, {"threads", g_.threads}};
    for (std::size_t n = 3; n <= n_max; ++n) {
      const auto g = gen_complete(n);
      TraversalOptions opts{.retain_paths = false, .sink = {}, .threads = g_.threads};
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = algo == "bots" ? bots_search(g, VertexId{1}, opts)
                                    : obots_search(g, VertexId{1}, opts);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      auto row = row_of("K_" + std::to_string(n), r, secs);
      row.euler_gap = std::abs(row.ratio - std::numbers::e);
      report.rows.push_back(std::move(row));
    }
    emit(report);
  }

  // invariant ---------------------------------------------------------------
  int invariant() {
    const auto g = load();
    const auto counts = traversal_invariant(g, g_.threads);
    bool equal = true;
    for (const auto& [v, c] : counts) equal = equal && c == counts.begin()->second;
    if (g_.json) {
      json rows = json::array();
      for (const auto& [v, c] : counts) rows.push_back({{"start", v.value}, {"hamiltonian_cycles", c}});
      out_ << json{{"command", "invariant"},
                   {"params", {{"file", file}, {"threads", g_.threads}}},
                   {"rows", rows},
                   {"verdict", equal ? "PASS" : "FAIL"}}
                  .dump(2)
           << '\n';
    } else {
      out_ << "start\thc\n";
      for (const auto& [v, c] : counts) out_ << v.value << '\t' << c << '\n';
      out_ << "verdict\t" << (equal ? "PASS" : "FAIL") << '\n';
    }
    return equal ? kOk : kInvariant;
  }

  // partition ---------------------------------------------------------------
  std::vector<std::uint32_t> seeds;

  void partition() {
    const auto g = load();
    std::vector<VertexId> ids;
    for (auto s : seeds) ids.emplace_back(s);
    const auto r = relgraph::partition(g, ids);
    const auto as_json = [](std::span<const VertexId> vs) {
      json a = json::array();
      for (auto v : vs) a.push_back(v.value);
      return a;
    };
    if (g_.json) {
      json regions = json::array();
      for (const auto& region : r.regions) regions.push_back(as_json(region));
      out_ << json{{"command", "partition"},
                   {"params", {{"file", file}, {"seeds", seeds}}},
                   {"regions", regions},
                   {"stranded", as_json(r.stranded)},
                   {"loops", r.loops}}
                  .dump(2)
           << '\n';
      return;
    }
    out_ << "regions\t" << r.regions.size() << "\nsizes";
    for (const auto& region : r.regions) out_ << '\t' << region.size();
    out_ << '\n';
    for (std::size_t i = 0; i < r.regions.size(); ++i) {
      out_ << "region " << (i + 1);
      for (auto v : r.regions[i]) out_ << '\t' << v.value;
      out_ << '\n';
    }
    out_ << "stranded";
    for (auto v : r.stranded) out_ << '\t' << v.value;
    out_ << "\nloops\t" << r.loops << '\n';
  }

  // bocps -------------------------------------------------------------------
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  bool batched = false;

  void bocps() {
    const auto r = relgraph::bocps(m1, m2, {.batched = batched});
    const auto gcd = static_cast<std::uint64_t>(m1) / r.k1;
    const auto lcm = lcm_of(m1, m2);
    if (g_.json) {
      out_ << json{{"command", "bocps"},
                   {"params", {{"m1", m1}, {"m2", m2}, {"batched", batched}}},
                   {"k1", r.k1},
                   {"k2", r.k2},
                   {"loops", r.loops},
                   {"gcd", gcd},
                   {"lcm", lcm}}
                  .dump(2)
           << '\n';
      return;
    }
    out_ << "k1\tk2\tgcd\tlcm\tloops\n"
         << r.k1 << '\t' << r.k2 << '\t' << gcd << '\t' << lcm << '\t' << r.loops << '\n';
  }

  // color -------------------------------------------------------------------
  std::string color_algo = "bogpc";
  std::size_t trials = 100;
  bool exact = false;
  std::size_t limit = kDefaultMcivsLimit;

  void color() {
    const auto g = load();
    if (exact) {
      color_exact(g);
      return;
    }
    const std::size_t max_degree = to_edge_relation(g).max_degree();
    std::vector<std::uint32_t> ks(trials, 0);
    std::vector<char> bad(trials, 0);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < trials; i = next++) {
        const std::uint64_t seed = g_.seed + i;
        const Coloring c = color_algo == "boerc" ? boerc(g, seed) : bogpc(g, seed);
        ks[i] = c.k;
        bad[i] = !verify_coloring(g, c) || c.k > max_degree + 1;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1U, g_.threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < trials; ++i) {
      if (bad[i]) {
        throw InvariantViolation(color_algo + " produced an invalid coloring for seed " +
                                 std::to_string(g_.seed + i));
      }
    }
    std::map<std::uint32_t, std::uint64_t> counts;
    for (auto k : ks) ++counts[k];

    if (g_.json) {
      json rows = json::array();
      for (const auto& [k, c] : counts) {
        rows.push_back({{"k", k}, {"count", c}, {"frequency", frequency(c)}});
      }
      out_ << json{{"command", "color"},
                   {"params",
                    {{"file", file}, {"algo", color_algo}, {"trials", trials}, {"seed", g_.seed}}},
                   {"max_degree", max_degree},
                   {"rows", rows}}
                  .dump(2)
           << '\n';
      return;
    }
    out_ << "algo\t" << color_algo << "\ntrials\t" << trials << "\nmax_degree\t" << max_degree
         << "\nk\tcount\tfrequency\n";
    for (const auto& [k, c] : counts) out_ << k << '\t' << c << '\t' << frequency(c) << '\n';
  }

 private:
  static ReportRow row_of(std::string label, const TraversalResult& r, double secs) {
    return ReportRow{.label = std::move(label),
                     .loop_count = r.loop_count,
                     .breadth = r.breadth,
                     .ratio = r.ratio(),
                     .hamiltonian_paths = r.hamilton.hamiltonian_paths,
                     .hamiltonian_cycles = r.hamilton.hamiltonian_cycles,
                     .wall_seconds = secs,
                     .euler_gap = std::nullopt};
  }

  void emit(const ExperimentReport& report) {
    if (g_.json) {
      out_ << to_json(report).dump(2) << '\n';
    } else {
      write_tsv(out_, report);
    }
  }

  std::string frequency(std::uint64_t count) const {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3)
      << static_cast<double>(count) / static_cast<double>(trials);
    return s.str();
  }

  void color_exact(const MultiTraversalRelation& g) {
    const auto s = summarize_mcivs(g, limit);
    std::optional<std::uint32_t> oracle;
    if (g.vertex_count() <= kOracleLimit) oracle = chromatic_oracle(g);
    if (oracle && *oracle != s.min_bound) {
      throw InvariantViolation("interval bound " + std::to_string(s.min_bound) +
                               " differs from chromatic number " + std::to_string(*oracle));
    }
    if (g_.json) {
      json hist = json::array();
      for (const auto& [b, c] : s.bound_counts) hist.push_back({{"bound", b}, {"count", c}});
      json doc = {{"command", "color"},
                  {"params", {{"file", file}, {"exact", true}, {"limit", limit}}},
                  {"partitions", s.partitions},
                  {"min_bound", s.min_bound},
                  {"min_remainder_at_bound", s.min_remainder_at_bound},
                  {"bounds", hist}};
      if (oracle) doc["chromatic_number"] = *oracle;
      out_ << doc.dump(2) << '\n';
      return;
    }
    out_ << "partitions\t" << s.partitions << "\nmin_bound\t" << s.min_bound
         << "\nmin_remainder_at_bound\t" << s.min_remainder_at_bound << '\n';
    if (oracle) out_ << "chromatic_number\t" << *oracle << '\n';
    out_ << "bound\tcount\n";
    for (const auto& [b, c] : s.bound_counts) out_ << b << '\t' << c << '\n';
  }

  const Globals& g_;
  std::ostream& out_;
};

// sequences ---------------------------------------------------------------

void print_vertices(std::ostream& out, const char* label, std::span<const VertexId> vs) {
  out << label;
  for (auto v : vs) out << '\t' << v.value;
  out << '\n';
}

std::vector<VertexId> vertices_of(std::span<const Arc> arcs) {
  std::vector<VertexId> vs;
  for (const auto& a : arcs) vs.push_back(a.tail);
  if (!arcs.empty()) vs.push_back(arcs.back().head);
  return vs;
}

struct SequenceArgs {
  std::vector<std::uint32_t> vertices;
  std::size_t index = 1;
  std::size_t power = 1;
  std::size_t cycle_length = 0;
  std::size_t m = 0;

  ArcSequence arcs() const {
    std::vector<VertexId> ids;
    for (auto v : vertices) {
      if (v == 0) throw DomainError("vertex ids are positive");
      ids.emplace_back(v);
    }
    return to_arc_sequence(ids);
  }
};

void sequences_check(const Globals& g, const SequenceArgs& a, std::ostream& out) {
  const auto s = a.arcs();
  const bool trail = is_trail(s);
  const bool path = is_path(s);
  const bool cycle = is_cycle(s);
  std::vector<VertexId> medium;
  if (path) medium = medium_vertices(s);
  const std::size_t chains = cycle ? chains_of(s).size() : 0;
  if (g.json) {
    json m = json::array();
    for (auto v : medium) m.push_back(v.value);
    out << json{{"command", "sequences check"},
                {"params", {{"vertices", a.vertices}}},
                {"trail", trail},
                {"path", path},
                {"cycle", cycle},
                {"medium_vertices", m},
                {"chains", chains}}
               .dump(2)
        << '\n';
    return;
  }
  out << "trail\t" << (trail ? "yes" : "no") << "\npath\t" << (path ? "yes" : "no") << "\ncycle\t"
      << (cycle ? "yes" : "no") << '\n';
  if (path) print_vertices(out, "medium", medium);
  if (cycle) out << "chains\t" << chains << '\n';
}

void sequences_permute(const Globals& g, const SequenceArgs& a, std::ostream& out) {
  const auto s = a.arcs();
  const auto p = cycle_permute(s, {a.index, a.power});
  if (!is_cycle(p)) throw InvariantViolation("cycle permutation broke the cycle");
  const auto vs = vertices_of(p);
  if (g.json) {
    json ids = json::array();
    for (auto v : vs) ids.push_back(v.value);
    out << json{{"command", "sequences permute"},
                {"params", {{"vertices", a.vertices}, {"index", a.index}, {"power", a.power}}},
                {"result", ids}}
               .dump(2)
        << '\n';
    return;
  }
  print_vertices(out, "result", vs);
}

void sequences_minpower(const Globals& g, const SequenceArgs& a, std::ostream& out) {
  const auto closed = minimal_power(a.cycle_length, a.m);
  const auto search = minimal_power_by_bocps(a.cycle_length, a.m);
  if (closed != search) throw InvariantViolation("minimal power backends disagree");
  if (g.json) {
    out << json{{"command", "sequences minpower"},
                {"params", {{"n", a.cycle_length}, {"m", a.m}}},
                {"minimal_power", closed}}
               .dump(2)
        << '\n';
    return;
  }
  out << "minimal_power\t" << closed << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  Commands cmd(globals, out);
  SequenceArgs seq;

  CLI::App app{"Exhaustive traversal, partition and coloring experiments", "relgraph"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "Emit one JSON document instead of TSV");
  app.add_option("--seed", globals.seed, "Base seed for randomized commands");
  app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_flag("--undirected", globals.undirected, "Mirror every arc read from a graph file");
  app.add_flag("--force", globals.force, "Lift desk-scale size guards");
  app.add_flag("--time", globals.time, "Add wall-clock columns to reports");

  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("family", cmd.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "grid", "cycleseq", "dodecahedron"}));
  gen->add_option("params", cmd.gen_params, "Family parameters");
  gen->add_option("-o,--output", cmd.gen_output, "Output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "Classify a graph file");
  classify->add_option("file", cmd.file)->required();

  auto* traverse = app.add_subcommand("traverse", "Exhaustive traversal from one start");
  traverse->add_option("file", cmd.file)->required();
  traverse->add_option("--algo", cmd.algo)->check(CLI::IsMember({"obots", "bots"}));
  traverse->add_option("--start", cmd.start, "Start vertex (default: smallest id)");
  traverse->add_flag("--paths", cmd.print_paths, "Print every maximal path");

  auto* euler = app.add_subcommand("euler", "Complete-graph loop/breadth ratios for n = 3..n_max");
  euler->add_option("--n-max", cmd.n_max);
  euler->add_option("--algo", cmd.algo)->check(CLI::IsMember({"obots", "bots"}));

  auto* invariant = app.add_subcommand("invariant", "Hamiltonian-cycle count from every start");
  invariant->add_option("file", cmd.file)->required();

  auto* partition = app.add_subcommand("partition", "Layer a graph outward from seed vertices");
  partition->add_option("file", cmd.file)->required();
  partition->add_option("--seeds", cmd.seeds, "Comma-separated seed vertices")
      ->required()
      ->delimiter(',');

  auto* bocps = app.add_subcommand("bocps", "Minimal k1, k2 with k1*m2 = k2*m1");
  bocps->add_option("m1", cmd.m1)->required();
  bocps->add_option("m2", cmd.m2)->required();
  bocps->add_flag("--batched", cmd.batched, "Fold runs of same-direction moves");

  auto* color = app.add_subcommand("color", "Randomized coloring trials or exact interval bound");
  color->add_option("file", cmd.file)->required();
  color->add_option("--algo", cmd.color_algo)->check(CLI::IsMember({"bogpc", "boerc"}));
  color->add_option("--trials", cmd.trials)->check(CLI::PositiveNumber);
  color->add_flag("--exact", cmd.exact, "Enumerate interval partitions instead");
  color->add_option("--limit", cmd.limit, "Vertex limit for --exact");

  auto* sequences = app.add_subcommand("sequences", "Trail, path and cycle validators");
  sequences->require_subcommand(1);
  auto* check = sequences->add_subcommand("check", "Classify a vertex sequence");
  check->add_option("vertices", seq.vertices)->required();
  auto* permute = sequences->add_subcommand("permute", "Cycle permutation of a closed sequence");
  permute->add_option("--index", seq.index)->required();
  permute->add_option("--power", seq.power)->required();
  permute->add_option("vertices", seq.vertices)->required();
  auto* minpower = sequences->add_subcommand("minpower", "Minimal power returning a cycle to itself");
  minpower->add_option("n", seq.cycle_length)->required();
  minpower->add_option("m", seq.m)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) cmd.gen();
    if (classify->parsed()) cmd.classify();
    if (traverse->parsed()) cmd.traverse();
    if (euler->parsed()) cmd.euler();
    if (invariant->parsed()) return cmd.invariant();
    if (partition->parsed()) cmd.partition();
    if (bocps->parsed()) cmd.bocps();
    if (color->parsed()) cmd.color();
    if (check->parsed()) sequences_check(globals, seq, out);
    if (permute->parsed()) sequences_permute(globals, seq, out);
    if (minpower->parsed()) sequences_minpower(globals, seq, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kRefused;
  } catch (const SizeRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    // DomainError, out_of_range and overflow all reject the input.
    err << "error: " << e.what() << '\n';
    return kRefused;
  }
  return kOk;
}

}  // namespace relgraph::cli
