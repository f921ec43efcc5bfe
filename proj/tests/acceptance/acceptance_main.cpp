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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance [--extended] [--threads N]
//
// --extended adds the k = 11 cycle-sequence row (about 11.5 million maximal paths).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_graphs.hpp"
#include "relgraph/bocps.hpp"
#include "relgraph/coloring.hpp"
#include "relgraph/generators.hpp"
#include "relgraph/partition.hpp"
#include "relgraph/sequences.hpp"
#include "relgraph/traversal.hpp"

namespace {

using namespace relgraph;
namespace rt = relgraph::testing;

struct Config {
  bool extended = false;
  unsigned threads = 1;
};

/// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& note) {
    if (!ok && failures_.size() < 5) failures_.push_back(note);
    if (!ok) ++failed_;
  }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream s;
    s << failed_ << " failed";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string trim_separator(std::string s) {
  if (s.ends_with("; ")) s.resize(s.size() - 2);
  return s;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

TraversalOptions counts_only(unsigned threads) {
  TraversalOptions o;
  o.retain_paths = false;
  o.threads = threads;
  return o;
}

// Complete graphs: exact loop/breadth pairs for n = 5..9.
std::string criterion_1(Check& c, const Config& cfg) {
  const std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> table{
      {5, {65, 24}}, {6, {326, 120}}, {7, {1957, 720}}, {8, {13700, 5040}}, {9, {109601, 40320}}};
  double ratio9 = 0;
  for (const auto& [n, expected] : table) {
    const auto r = obots_search(gen_complete(n), VertexId{1}, counts_only(cfg.threads));
    c.expect(r.loop_count == expected.first && r.breadth == expected.second,
             "K_" + str(n) + " gave (" + str(r.loop_count) + ", " + str(r.breadth) + ")");
    c.expect(r.loop_count == rt::complete_graph_loops(n) && r.breadth == rt::factorial(n - 1),
             "K_" + str(n) + " disagrees with the series");
    if (n == 9) ratio9 = r.ratio();
  }
  c.expect(std::abs(ratio9 - 2.7182818) < 1e-5, "ratio at n=9 is " + str(ratio9));
  std::ostringstream s;
  s << std::setprecision(9) << "K_9 ratio " << ratio9;
  return s.str();
}

// loop_count / breadth climbs towards e and never passes it.
std::string criterion_2(Check& c, const Config& cfg) {
  double previous = 0;
  std::ostringstream s;
  s << std::setprecision(7) << "ratios";
  for (std::size_t n = 3; n <= 9; ++n) {
    const double ratio = obots_search(gen_complete(n), VertexId{1}, counts_only(cfg.threads)).ratio();
    c.expect(ratio > previous, "not increasing at n=" + str(n));
    c.expect(ratio < std::numbers::e + 1e-6, "above e at n=" + str(n));
    previous = ratio;
    s << ' ' << ratio;
  }
  return s.str();
}

// Dodecahedron from every start.
std::string criterion_3(Check& c, const Config& cfg) {
  const auto d = gen_dodecahedron();
  for (auto v : d.vertices()) {
    const auto r = obots_search(d, v, counts_only(cfg.threads));
    c.expect(r.breadth == 3120 && r.hamilton.hamiltonian_paths == 162 &&
                 r.hamilton.hamiltonian_cycles == 60,
             "start " + str(v) + " gave " + str(r.breadth) + "/" + str(r.hamilton.hamiltonian_paths) +
                 "/" + str(r.hamilton.hamiltonian_cycles));
  }
  const auto inv = traversal_invariant(d, cfg.threads);
  for (const auto& [v, hc] : inv) c.expect(hc == 60, "invariant at " + str(v) + " is " + str(hc));
  c.expect(inv.size() == 20, "invariant covered " + str(inv.size()) + " starts");
  return "breadth 3120, HP 162, HC 60 from all 20 starts";
}

struct CycleSequenceRow {
  std::size_t k, z;
  std::uint64_t breadth, hp, hc;
};

// Cycle-sequence rows with z = 3.
std::string criterion_4(Check& c, const Config& cfg) {
  std::vector<CycleSequenceRow> rows{{9, 3, 804226, 1412, 300}};
  if (cfg.extended) rows.push_back({11, 3, 11474516, 3858, 836});
  std::ostringstream s;
  for (const auto& row : rows) {
    const auto g = gen_cycle_sequence(row.k, row.z);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = obots_search(g, VertexId{1}, counts_only(cfg.threads));
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    c.expect(r.breadth == row.breadth && r.hamilton.hamiltonian_paths == row.hp &&
                 r.hamilton.hamiltonian_cycles == row.hc,
             "k=" + str(row.k) + " gave " + str(r.breadth) + "/" + str(r.hamilton.hamiltonian_paths) +
                 "/" + str(r.hamilton.hamiltonian_cycles));
    s << "k=" << row.k << " n=" << g.vertex_count() << " breadth " << r.breadth << " in "
      << std::fixed << std::setprecision(2) << dt.count() << "s; ";
  }
  return trim_separator(s.str());
}

// BOTS, OBOTS and the reference traversal agree on random small relations.
std::string criterion_5(Check& c, const Config&) {
  rt::Rng rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = rt::uniform(rng, 2, 8);
    const auto g = rt::random_connected(rng, n, 2, rt::uniform(rng, 1, 5) / 10.0, 0.1);
    const VertexId start{rt::uniform(rng, 1, n)};
    const auto a = bots_search(g, start);
    const auto b = obots_search(g, start);
    std::multiset<SearchPath> pa(a.paths.begin(), a.paths.end());
    std::multiset<SearchPath> pb(b.paths.begin(), b.paths.end());
    c.expect(pa == pb, "path sets differ on trial " + str(trial));
    c.expect(a.loop_count == b.loop_count && a.breadth == b.breadth,
             "loop counts differ on trial " + str(trial));
    const auto o = rt::oracle_traversal(g, start.value);
    c.expect(o.loop_count == b.loop_count && o.breadth == b.breadth,
             "reference disagrees on trial " + str(trial));
  }
  return "200 instances";
}

std::string criterion_6(Check& c, const Config&) {
  std::uint64_t max_loops = 0;
  for (std::int64_t a = 1; a <= 1000; ++a) {
    for (std::int64_t b = 1; b <= 1000; ++b) {
      const auto r = bocps(a, b);
      const auto g = static_cast<std::uint64_t>(std::gcd(a, b));
      const auto l = static_cast<std::uint64_t>(std::lcm(a, b));
      if (gcd_of(a, b) != g || lcm_of(a, b) != l || r.k1 != static_cast<std::uint64_t>(a) / g ||
          r.k2 != static_cast<std::uint64_t>(b) / g) {
        c.expect(false, "mismatch at (" + str(a) + ", " + str(b) + ")");
      }
      if (r.loops > static_cast<std::uint64_t>(a + b)) {
        c.expect(false, "loop bound broken at (" + str(a) + ", " + str(b) + ")");
      }
      max_loops = std::max(max_loops, r.loops);
    }
  }
  return "10^6 pairs, max loops " + str(max_loops);
}

std::map<std::uint32_t, std::size_t> bfs(const MultiTraversalRelation& g, std::uint32_t seed) {
  std::map<std::uint32_t, std::size_t> dist{{seed, 0}};
  std::queue<std::uint32_t> q;
  q.push(seed);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (const auto& a : g.arcs()) {
      if (a.arc.tail.value != u || dist.contains(a.arc.head.value)) continue;
      dist[a.arc.head.value] = dist[u] + 1;
      q.push(a.arc.head.value);
    }
  }
  return dist;
}

std::string criterion_7(Check& c, const Config&) {
  rt::Rng rng(7);
  std::size_t vertices = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = rt::uniform(rng, 2, 50);
    const auto g = rt::random_connected_simple(rng, n, rt::uniform(rng, 1, 4) / static_cast<double>(n));
    const std::uint32_t seed = rt::uniform(rng, 1, n);
    const std::vector<VertexId> seeds{VertexId{seed}};
    const auto r = partition(g, seeds);
    const auto dist = bfs(g, seed);
    for (auto v : g.vertices()) {
      const auto idx = r.region_of(v);
      // region_of is zero-based, so this is "region index - 1".
      c.expect(idx.has_value() && *idx == dist.at(v.value),
               "trial " + str(trial) + " vertex " + str(v));
      ++vertices;
    }
    for (const auto& a : g.arcs()) {
      const auto i = *r.region_of(a.arc.tail);
      const auto j = *r.region_of(a.arc.head);
      c.expect((i > j ? i - j : j - i) <= 1, "arc skips a region on trial " + str(trial));
    }
  }
  return "100 instances, " + str(vertices) + " vertices";
}

ArcSequence ring(std::size_t n) {
  ArcSequence out;
  for (std::uint32_t i = 1; i <= n; ++i) {
    out.push_back(Arc{VertexId{i}, VertexId{i == n ? 1U : i + 1}});
  }
  return out;
}

std::string criterion_8(Check& c, const Config&) {
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 200; ++n) {
    const auto base = ring(n);
    for (std::size_t m = 1; m < n; ++m) {
      ++pairs;
      const std::size_t expected = n / std::gcd(n, m);
      c.expect(minimal_power(n, m) == expected, "closed form at (" + str(n) + ", " + str(m) + ")");
      ArcSequence cur = base;
      std::size_t power = 0;
      do {
        cur = cycle_permute(cur, {m, 1});
        ++power;
        if (n <= 40 || power == 1) c.expect(is_cycle(cur), "not a cycle at (" + str(n) + ", " + str(m) + ")");
      } while (cur != base && power <= n);
      c.expect(power == expected, "literal power at (" + str(n) + ", " + str(m) + ") is " + str(power));
      c.expect(is_cycle(cycle_permute(base, {m, expected - 1})), "closed-form power not a cycle");
    }
  }
  return str(pairs) + " (N, m) pairs";
}

bool bipartite(const EdgeRelation& e) {
  std::map<VertexId, int> side;
  for (auto s : e.vertices) {
    if (side.contains(s)) continue;
    side[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : e.vertices) {
        if (!e.adjacent(u, v)) continue;
        if (!side.contains(v)) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Chromatic number for graphs of maximum degree 3 (Brooks).
std::uint32_t cubic_chromatic(const MultiTraversalRelation& g) {
  const auto e = to_edge_relation(g);
  if (e.edges.size() * 2 == e.vertices.size() * (e.vertices.size() - 1)) {
    return static_cast<std::uint32_t>(e.vertices.size());
  }
  return bipartite(e) ? 2 : 3;
}

std::string criterion_9(Check& c, const Config&) {
  struct Instance {
    std::string name;
    MultiTraversalRelation g;
  };
  std::vector<Instance> instances{{"dodecahedron", gen_dodecahedron()}, {"K_4", gen_complete(4)}};
  for (std::size_t n = 4; n <= 9; ++n) instances.push_back({"C_" + str(n), gen_cycle(n)});
  rt::Rng rng(9);
  for (std::uint32_t n = 4; n <= 20; n += 2) {
    instances.push_back({"cubic_" + str(n), rt::random_cubic(rng, n)});
  }

  using Algo = std::function<Coloring(const MultiTraversalRelation&, std::uint64_t)>;
  const std::vector<std::pair<std::string, Algo>> algos{{"bogpc", bogpc}, {"boerc", boerc}};
  for (const auto& inst : instances) {
    const auto bound = to_edge_relation(inst.g).max_degree() + 1;
    const auto chi = cubic_chromatic(inst.g);
    for (const auto& [name, algo] : algos) {
      std::size_t optimal = 0;
      for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto col = algo(inst.g, seed);
        c.expect(verify_coloring(inst.g, col), name + " improper on " + inst.name);
        c.expect(col.k <= bound, name + " over degree bound on " + inst.name);
        if (col.k == chi) ++optimal;
      }
      std::cout << "  info  " << std::left << std::setw(14) << inst.name << name << " chi=" << chi
                << " optimum frequency " << std::fixed << std::setprecision(3) << optimal / 500.0
                << '\n';
    }
  }

  std::ostringstream s;
  const auto d = gen_dodecahedron();
  for (const auto& [name, algo] : algos) {
    std::map<std::uint32_t, std::size_t> hist;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) ++hist[algo(d, seed).k];
    c.expect(hist[3] >= 1, name + " never reached k=3 on the dodecahedron");
    s << name << " dodecahedron k=3 in " << hist[3] << "/1000; ";
  }
  return trim_separator(s.str());
}

MultiTraversalRelation petersen() {
  RelationBuilder b;
  for (std::uint32_t i = 0; i < 5; ++i) {
    b.add_edge(VertexId{i + 1}, VertexId{(i + 1) % 5 + 1});
    b.add_edge(VertexId{i + 1}, VertexId{i + 6});
    b.add_edge(VertexId{i + 6}, VertexId{(i + 2) % 5 + 6});
  }
  return b.build();
}

MultiTraversalRelation prism(std::uint32_t k) {
  RelationBuilder b;
  for (std::uint32_t i = 0; i < k; ++i) {
    b.add_edge(VertexId{i + 1}, VertexId{(i + 1) % k + 1});
    b.add_edge(VertexId{i + k + 1}, VertexId{(i + 1) % k + k + 1});
    b.add_edge(VertexId{i + 1}, VertexId{i + k + 1});
  }
  return b.build();
}

MultiTraversalRelation star(std::uint32_t leaves) {
  RelationBuilder b;
  for (std::uint32_t v = 2; v <= leaves + 1; ++v) b.add_edge(VertexId{1}, VertexId{v});
  return b.build();
}

struct BoundSummary {
  std::uint32_t bound;
  std::size_t remainder;
};

// Minimum |classes| + |remainder| over all layouts plus the all-singletons one.
BoundSummary minimum_bound(const MultiTraversalRelation& g) {
  BoundSummary best{static_cast<std::uint32_t>(g.vertex_count()), g.vertex_count()};
  for_each_mcivs(g, kDefaultMcivsLimit, [&](const IntervalPartition& p) {
    const auto b = static_cast<std::uint32_t>(p.bound());
    if (b < best.bound || (b == best.bound && p.remainder.size() < best.remainder)) {
      best = {b, p.remainder.size()};
    }
  });
  return best;
}

std::string criterion_10(Check& c, const Config&) {
  std::vector<std::pair<std::string, MultiTraversalRelation>> corpus;
  for (std::size_t n = 3; n <= 10; ++n) corpus.emplace_back("C_" + str(n), gen_cycle(n));
  for (std::size_t n = 2; n <= 8; ++n) corpus.emplace_back("K_" + str(n), gen_complete(n));
  for (std::size_t n = 2; n <= 10; ++n) corpus.emplace_back("P_" + str(n), gen_path(n));
  for (auto [r, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}}) {
    corpus.emplace_back("grid_" + str(r) + "x" + str(k), gen_grid(r, k));
  }
  for (std::uint32_t l = 2; l <= 9; ++l) corpus.emplace_back("star_" + str(l), star(l));
  for (std::uint32_t k = 3; k <= 5; ++k) corpus.emplace_back("prism_" + str(k), prism(k));
  corpus.emplace_back("petersen", petersen());
  rt::Rng rng(10);
  for (int i = 0; i < 40; ++i) {
    const std::uint32_t n = rt::uniform(rng, 2, 10);
    corpus.emplace_back("random_" + str(i), rt::random_connected_simple(rng, n, rt::uniform(rng, 1, 7) / 10.0));
  }

  for (const auto& [name, g] : corpus) {
    const auto b = minimum_bound(g);
    const auto chi = chromatic_oracle(g);
    c.expect(b.bound == chi, name + ": bound " + str(b.bound) + " vs chromatic " + str(chi));
  }
  const auto c5 = minimum_bound(gen_cycle(5));
  const auto c6 = minimum_bound(gen_cycle(6));
  c.expect(c5.bound == 3 && c5.remainder == 1, "C_5 gave " + str(c5.bound) + " / " + str(c5.remainder));
  c.expect(c6.bound == 2 && c6.remainder == 0, "C_6 gave " + str(c6.bound) + " / " + str(c6.remainder));
  return str(corpus.size()) + " corpus instances";
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      cfg.extended = true;
    } else if (arg == "--threads" && i + 1 < argc) {
      cfg.threads = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--extended] [--threads N]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<std::string(Check&, const Config&)>>> criteria{
      {"complete-graph loop and breadth table", criterion_1},
      {"loop/breadth ratio increases towards e", criterion_2},
      {"dodecahedron counts from every start", criterion_3},
      {"cycle-sequence counts", criterion_4},
      {"BOTS and OBOTS equivalence", criterion_5},
      {"BOCPS gcd/lcm equivalence", criterion_6},
      {"partition matches BFS distance", criterion_7},
      {"cycle-permutation laws", criterion_8},
      {"coloring soundness and precision", criterion_9},
      {"interval-partition chromatic bound", criterion_10},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string detail;
    try {
      detail = criteria[i].second(check, cfg);
    } catch (const std::exception& ex) {
      check.expect(false, std::string("exception: ") + ex.what());
    }
    all = all && check.ok();
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << (check.ok() ? detail : check.summary()) << ")" << std::endl;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
