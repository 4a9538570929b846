// Copyright 2026 The pgspan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pgspan/errors.hpp"
#include "pgspan/generators.hpp"
#include "pgspan/greedy.hpp"
#include "pgspan/harness.hpp"
#include "pgspan/lc_cuts.hpp"
#include "pgspan/pg_analysis.hpp"
#include "pgspan/routing.hpp"
#include "support.hpp"

namespace pgspan {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures++ == 0) first_failure = what;
  }
};

/// Everything built in criteria 1-3, re-checked by criterion 4.
struct Built {
  Graph g;
  int t;
  SpannerResult result;
};
std::vector<Built> g_built;

Outcome scripted_c4() {
  Outcome o;
  const Graph c4 = generate(GeneratorSpec::cycle(4));
  for (int t : {3, 5}) {
    try {
      auto par = scripted_parallel_greedy(c4, t, c4_script(c4));
      o.check(par.certificate.rounds.size() == 2, "scripted run did not accept both rounds");
      o.check(par.spanner.edge_count() == 4, "scripted run kept " +
                                                 std::to_string(par.spanner.edge_count()) + " edges");
      o.check(girth(par.spanner) == 4u, "scripted output girth is not 4");
      g_built.push_back({c4, t, par});
    } catch (const ScriptViolation& v) {
      o.check(false, std::string("round rejected: ") + v.what());
    }
    GreedyConfig cfg;
    cfg.t = t;
    auto seq = sequential_greedy(c4, cfg);
    o.check(seq.spanner.edge_count() == 3, "sequential kept " +
                                               std::to_string(seq.spanner.edge_count()) + " edges");
    o.check(!girth(seq.spanner).has_value(), "sequential output has a cycle");
    g_built.push_back({c4, t, seq});
  }
  o.detail = "t=3,5: parallel 4 edges girth 4, sequential 3 edges girth inf";
  return o;
}

Outcome hypercube_dimensions() {
  Outcome o;
  for (std::uint32_t d = 6; d <= 10; ++d) {
    const Graph q = generate(GeneratorSpec::hypercube(d));
    const std::size_t expect = static_cast<std::size_t>(d) << (d - 1);
    for (int t : {3, 4, 5, 9}) {
      try {
        auto r = scripted_parallel_greedy(q, t, dimension_script(q));
        o.check(r.certificate.rounds.size() == d, "Q_" + std::to_string(d) + " round count");
        o.check(r.spanner.edge_count() == expect,
                "Q_" + std::to_string(d) + " kept " + std::to_string(r.spanner.edge_count()));
        o.check(verify_spanner(q, r.spanner, t).valid(), "Q_" + std::to_string(d) + " stretch");
        if (t == 3) g_built.push_back({q, t, std::move(r)});
      } catch (const ScriptViolation& v) {
        o.check(false, "Q_" + std::to_string(d) + " t=" + std::to_string(t) + ": " + v.what());
      }
    }
  }
  o.detail = "d=6..10, t in {3,4,5,9}: every round accepted, d*2^(d-1) edges (5120 for d=10)";
  return o;
}

Outcome sequential_sparsity() {
  Outcome o;
  const VertexId n = 512;
  std::size_t worst[2] = {0, 0};
  for (int k : {2, 3}) {
    const int t = 2 * k - 1;
    const double bound = std::pow(static_cast<double>(n), 1.0 + 1.0 / k) + n;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = generate(GeneratorSpec::erdos_renyi(n, 0.1, seed));
      GreedyConfig cfg;
      cfg.t = t;
      cfg.seed = seed;
      cfg.edge_order = EdgeOrder::RandomShuffle;
      auto r = sequential_greedy(g, cfg);
      const std::size_t m = r.spanner.edge_count();
      worst[k - 2] = std::max(worst[k - 2], m);
      o.check(static_cast<double>(m) <= bound, "t=" + std::to_string(t) + " seed " +
                                                   std::to_string(seed) + ": " + std::to_string(m) +
                                                   " edges");
      const auto gi = girth(r.spanner);
      o.check(!gi || *gi >= static_cast<std::uint32_t>(t + 2),
              "t=" + std::to_string(t) + " seed " + std::to_string(seed) + ": girth " +
                  std::to_string(gi.value_or(0)));
      g_built.push_back({g, t, std::move(r)});
    }
  }
  std::ostringstream d;
  d << "ER(512, 0.1) x20: t=3 max " << worst[0] << " <= " << std::lround(std::pow(512.0, 1.5) + 512)
    << ", t=5 max " << worst[1] << " <= " << std::lround(std::pow(512.0, 4.0 / 3) + 512)
    << ", girth >= t+2";
  o.detail = d.str();
  return o;
}

Outcome validity_suite() {
  Outcome o;
  std::size_t checked = 0;
  auto check_one = [&](const Graph& g, int t, const SpannerResult& r, const std::string& label) {
    const auto stretch = verify_spanner(g, r.spanner, t);
    o.check(stretch.valid(), label + ": stretch " + stretch.max_stretch_string());
    const auto v = verify_pg_sequence(g.vertex_count(), r.certificate, t);
    o.check(!v.has_value(), label + ": certificate " + (v ? v->describe() : std::string()));
    ++checked;
  };
  for (const auto& b : g_built) check_one(b.g, b.t, b.result, "earlier construction");
  const std::size_t earlier = checked;
  CounterRng rng(2024, 4);
  const char* families[] = {"er", "grid", "hypercube", "cycle", "complete", "petersen"};
  const char* strategies[] = {"greedy", "lex", "single", "seq"};
  for (int i = 0; i < 50; ++i) {
    const std::string family = families[rng.below(6)];
    const std::uint64_t seed = rng();
    std::string gen;
    if (family == "er") {
      gen = "er:" + std::to_string(testing::draw(rng, 20, 300)) + ":0.08";
    } else if (family == "grid") {
      gen = "grid:" + std::to_string(testing::draw(rng, 2, 20)) + ":" +
            std::to_string(testing::draw(rng, 2, 20));
    } else if (family == "hypercube") {
      gen = "hypercube:" + std::to_string(testing::draw(rng, 2, 8));
    } else if (family == "cycle") {
      gen = "cycle:" + std::to_string(testing::draw(rng, 3, 40));
    } else if (family == "complete") {
      gen = "complete:" + std::to_string(testing::draw(rng, 2, 30));
    } else {
      gen = "petersen";
    }
    const Graph g = generate(parse_generator_spec(gen, seed));
    const int t = static_cast<int>(testing::draw(rng, 2, 9));
    const std::string strategy = strategies[rng.below(4)];
    GreedyConfig cfg;
    cfg.t = t;
    cfg.seed = seed;
    SpannerResult r;
    if (strategy == "seq") {
      cfg.edge_order = EdgeOrder::RandomShuffle;
      r = sequential_greedy(g, cfg);
    } else {
      cfg.strategy = parse_strategy(strategy);
      r = parallel_greedy(g, cfg);
    }
    check_one(g, t, r, gen + " t=" + std::to_string(t) + " " + strategy);
  }
  o.detail = std::to_string(earlier) + " earlier constructions + " +
             std::to_string(checked - earlier) + " random combinations, " +
             std::to_string(o.failures) + " violations";
  return o;
}

/// Random spanning tree plus G(n, p) extra edges: always connected.
Graph connected_random(VertexId n, double p, std::uint64_t seed) {
  CounterRng rng(seed, 0x636f);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(static_cast<VertexId>(rng.below(v)), v);
  const Graph extra = testing::random_graph(n, p, seed);
  for (const Edge& e : extra.edges()) {
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Outcome arboricity_equivalence() {
  Outcome o;
  CounterRng rng(77, 5);
  std::size_t graphs = 0, connected = 0;
  for (std::uint64_t i = 0; i < 240; ++i) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 2, 9));
    const double p = 0.05 + 0.9 * rng.unit_at(i);
    const bool conn = i % 2 == 0;
    const Graph g = conn ? connected_random(n, p, i) : testing::random_graph(n, p, i);
    const auto a = arboricity_exact(g);
    const std::uint32_t brute = oracle::arboricity(g);
    const std::string label = "graph " + std::to_string(i);
    o.check(a.exact.has_value() && *a.exact == brute, label + ": flow vs subsets");
    const std::uint32_t alpha = brute;
    if (g.edge_count() > 0) {
      const auto k = degeneracy(g).k;
      o.check(alpha <= k && k <= 2 * alpha - 1, label + ": degeneracy sandwich");
    }
    if (connected_components(g).count() == 1) {
      o.check(g.edge_count() + 1 >= g.vertex_count() - 1 + alpha, label + ": m+1 >= n-1+alpha");
      ++connected;
    }
    ++graphs;
  }
  o.detail = std::to_string(graphs) + " graphs with n <= 9 (" + std::to_string(connected) +
             " connected for m+1 >= n-1+alpha)";
  return o;
}

Outcome min_degree_suite() {
  Outcome o;
  CounterRng rng(31, 6);
  std::size_t graphs = 0, exact = 0;
  while (graphs < 500) {
    const auto i = graphs;
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 2, 40));
    const Graph g = testing::random_graph(n, 0.02 + 0.5 * rng.unit_at(i), rng());
    if (g.edge_count() == 0) continue;
    const auto core = min_degree_subgraph(g, average_degree(g) / 2);
    o.check(!core.empty(), "empty core at half the average degree, graph " + std::to_string(i));
    const auto hd = high_min_degree_from_arboricity(g);
    if (hd.arboricity.exact) {
      ++exact;
      const Rational half(*hd.arboricity.exact, 2);
      bool ok = hd.subgraph.graph.vertex_count() > 0;
      for (VertexId v = 0; v < hd.subgraph.graph.vertex_count(); ++v) {
        ok = ok && Rational(hd.subgraph.graph.degree(v)) >= half;
      }
      o.check(ok, "min degree below alpha/2, graph " + std::to_string(i));
    }
    ++graphs;
  }
  o.detail = std::to_string(graphs) + " non-empty graphs; alpha exact on " + std::to_string(exact);
  return o;
}

Outcome restriction_closure() {
  Outcome o;
  CounterRng rng(55, 7);
  const char* strategies[] = {"greedy", "lex", "single"};
  std::size_t restrictions = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 8, 80));
    const Graph g = testing::random_graph(n, 0.05 + 0.3 * rng.unit_at(i), i);
    GreedyConfig cfg;
    cfg.t = static_cast<int>(testing::draw(rng, 2, 7));
    cfg.seed = i;
    cfg.strategy = parse_strategy(strategies[i % 3]);
    const auto r = parallel_greedy(g, cfg);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Edge> keep;
      const double frac = rng.unit_at(1000 + trial);
      for (const Edge& e : r.spanner.edges()) {
        if (rng.unit_at(rng()) < frac) keep.push_back(e);
      }
      const auto sub = restrict_pg_sequence(r.certificate, keep);
      o.check(!verify_pg_sequence(n, sub, cfg.t).has_value(),
              "certificate " + std::to_string(i) + " restriction rejected");
      ++restrictions;
    }
  }
  o.detail = "100 certificates, " + std::to_string(restrictions) + " random restrictions accepted";
  return o;
}

Outcome lc_cut_exactness() {
  Outcome o;
  CounterRng rng(66, 8);
  std::size_t instances = 0;
  for (std::uint64_t i = 0; instances < 150; ++i) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 2, 8));
    const Graph g = testing::random_graph(n, 0.2 + 0.6 * rng.unit_at(i), i);
    if (g.edge_count() == 0) continue;
    const auto h = static_cast<std::uint32_t>(testing::draw(rng, 1, 3));
    const auto s = static_cast<std::uint32_t>(testing::draw(rng, 1, 3));
    MovingCut cut(h * s);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (rng.below(3) == 0) cut.set(e, static_cast<std::uint32_t>(testing::draw(rng, 1, h * s)));
    }
    Demand d(n);
    for (int k = 0; k < 8; ++k) {
      d.add(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)),
            Rational(static_cast<long long>(testing::draw(rng, 1, 6)), 4));
    }
    const Rational len(static_cast<long long>(testing::draw(rng, 1, 8)), 2);
    const std::string label = "instance " + std::to_string(instances);
    const Rational sep = separated(g, cut, d, len);
    o.check(sep == oracle::separated(g, cut, d, len), label + ": separated");
    const auto sp = sparsity_wrt_demand(g, cut, d, len);
    o.check(sp.has_value() == (sep > 0) && (!sp || *sp == cut.size() / sep), label + ": sparsity");
    const auto cs = cut_sparsity(g, cut, h, s);
    const Rational best = oracle::max_separated(g, cut, h, s);
    o.check(cs.max_separated == best, label + ": cut sparsity maximum");
    o.check(cs.witness.is_unit(g) && cs.witness.is_h_length(g, Rational(h)) &&
                separated(g, cut, cs.witness, Rational(h * s)) == best,
            label + ": witness");
    o.check(cs.sparsity.has_value() == (best > 0) && (!cs.sparsity || *cs.sparsity == cut.size() / best),
            label + ": cut sparsity value");
    ++instances;
  }
  std::size_t exp_graphs = 0;
  for (std::uint64_t i = 0; exp_graphs < 50; ++i) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 2, 12));
    const Graph g = testing::random_graph(n, 0.15 + 0.5 * rng.unit_at(i), 500 + i);
    if (g.edge_count() == 0) continue;
    const auto h = static_cast<std::uint32_t>(testing::draw(rng, 1, 3));
    const auto s = static_cast<std::uint32_t>(testing::draw(rng, 2, 4));
    const auto ed = exponential_demand(g, h, s);
    for (const auto& row : ed.edge_demand) {
      Rational sum(0);
      for (const auto& x : row) sum += x;
      o.check(sum == 1, "exponential demand row sum " + to_string(sum));
    }
    o.check(ed.vertex_demand.is_unit(g), "lifted exponential demand not unit");
    ++exp_graphs;
  }
  o.detail = std::to_string(instances) + " cut/demand instances (n <= 8) exact; " +
             std::to_string(exp_graphs) + " exponential demands with unit rows and unit lift";
  return o;
}

Outcome routing_vs_lp() {
  Outcome o;
  CounterRng rng(88, 9);
  std::size_t cases = 0, feasible = 0, flows = 0;
  const Rational margin(105, 100);  // 1 + epsilon
  for (std::uint64_t i = 0; i < 80; ++i) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 3, 12));
    const Graph g = testing::random_graph(n, 0.2 + 0.4 * rng.unit_at(i), 900 + i);
    std::vector<Edge> m;
    std::vector<char> used(n, 0);
    for (const Edge& e : g.edges()) {
      if (!used[e.u] && !used[e.v] && rng.below(2) == 0) {
        used[e.u] = used[e.v] = 1;
        m.push_back(e);
      }
    }
    if (m.empty()) continue;
    const auto t = static_cast<std::uint32_t>(testing::draw(rng, 1, 4));
    const Rational delta(static_cast<long long>(testing::draw(rng, 1, 4)), 2);
    const Demand d = matching_demand(g, m, delta);
    std::optional<Rational> opt;
    try {
      opt = oracle::min_congestion(g, d, t);
    } catch (const std::exception& e) {
      o.check(false, std::string("LP oracle failed: ") + e.what());
      continue;
    }
    for (const Rational& factor : {Rational(1, 2), Rational(9, 10), Rational(1), Rational(21, 20),
                                   Rational(11, 10), Rational(2)}) {
      const Rational cap = *opt * factor;
      const std::string label = "case " + std::to_string(cases) + " (n=" + std::to_string(n) +
                                ", t=" + std::to_string(t) + ", opt=" + to_string(*opt) +
                                ", cap=" + to_string(cap) + ")";
      const auto r = route_matching(g, m, delta, t, cap);
      if (*opt * margin <= cap) o.check(r.feasible, label + ": reported infeasible");
      if (*opt > cap) o.check(!r.feasible, label + ": reported feasible");
      if (r.feasible) {
        ++feasible;
        const Flow& f = *r.flow;
        o.check(f.congestion(g) <= cap && f.dilation() <= t &&
                    f.routed_demand(n).entries() == d.entries(),
                label + ": flow recheck");
        ++flows;
      }
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " cases with n <= 12, t <= 4; " + std::to_string(feasible) +
             " feasible, " + std::to_string(flows) + " flows rechecked exactly";
  return o;
}

Outcome sweep_report(const std::filesystem::path& out_dir) {
  Outcome o;
  SweepPlan plan;
  for (int e = 8; e <= 12; ++e) {
    const int n = 1 << e;
    std::ostringstream gen;
    gen << "er:" << n << ":" << 32.0 / n;
    plan.generators.push_back(gen.str());
  }
  plan.t_values = {3, 5, 7, 9};
  plan.algorithms = {"par"};
  plan.strategies = {"greedy"};
  plan.seeds = {1};
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  std::ostringstream first, second;
  const auto rows = run_sweep(plan, first);
  run_sweep(plan, second);
  o.check(rows.size() == 20, "expected 20 rows, got " + std::to_string(rows.size()));
  o.check(strip(first.str()) == strip(second.str()), "CSV differs between identical runs");
  std::uint32_t max_degeneracy = 0;
  for (const auto& r : rows) {
    o.check(r.degeneracy > 0 && r.degeneracy < r.n, "degeneracy out of range");
    max_degeneracy = std::max(max_degeneracy, r.degeneracy);
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream(out_dir / "acceptance_sweep.csv") << first.str();
  std::ofstream svg(out_dir / "acceptance_sweep.svg");
  write_svg(svg, rows);
  o.detail = "ER n=2^8..2^12 (p=32/n), t in {3,5,7,9}: 20 rows, identical modulo millis, max degeneracy " +
             std::to_string(max_degeneracy) + "; written to " + (out_dir / "acceptance_sweep.csv").string();
  return o;
}

}  // namespace
}  // namespace pgspan

int main(int argc, char** argv) {
  using namespace pgspan;
  const std::filesystem::path out_dir = argc > 1 ? argv[1] : "acceptance_out";
  struct Entry {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "scripted parallel vs sequential greedy on C4", 1.0, scripted_c4},
      {2, "hypercube dimension-order lower bound", 10.0, hypercube_dimensions},
      {3, "sequential greedy sparsity on ER(512)", 120.0, sequential_sparsity},
      {4, "spanner validity suite", 0.0, validity_suite},
      {5, "arboricity oracle equivalence", 120.0, arboricity_equivalence},
      {6, "high minimum-degree subgraphs", 0.0, min_degree_suite},
      {7, "certificate restriction closure", 0.0, restriction_closure},
      {8, "lc-cuts exactness", 0.0, lc_cut_exactness},
      {9, "routing solver vs exact path LP", 300.0, routing_vs_lp},
      {10, "sweep report determinism", 0.0, [&] { return sweep_report(out_dir); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.check(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("%s  [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    if (!o.pass) {
      std::printf("        %zu failure(s); first: %s\n", o.failures, o.first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
