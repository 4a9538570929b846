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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgspan/errors.hpp"
#include "pgspan/generators.hpp"
#include "pgspan/greedy.hpp"
#include "pgspan/pg_analysis.hpp"
#include "support.hpp"

namespace pgspan {
namespace {

TEST(VerifySpanner, TamperedSpannerNamesEdge) {
  Graph c5 = generate(GeneratorSpec::cycle(5));
  Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto ok = verify_spanner(c5, path, 4);
  EXPECT_TRUE(ok.valid());
  EXPECT_EQ(ok.max_stretch, 4u);
  auto bad = verify_spanner(c5, path, 3);
  EXPECT_FALSE(bad.valid());
  EXPECT_EQ(bad.violating_edge, Edge(0, 4));
  EXPECT_EQ(bad.violations, 1u);
  EXPECT_EQ(bad.max_stretch_string(), ">3");
  EXPECT_THROW(verify_spanner(path, c5, 3), InputError);
}

TEST(VerifySpanner, SerialAndParallelAgree) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_graph(60, 0.15, seed);
    GreedyConfig cfg;
    cfg.t = 3;
    cfg.seed = seed;
    auto r = parallel_greedy(g, cfg);
    std::vector<Edge> fewer(r.spanner.edges().begin(), r.spanner.edges().end());
    if (!fewer.empty()) fewer.erase(fewer.begin() + static_cast<long>(seed % fewer.size()));
    Graph h(g.vertex_count(), fewer);
    for (int t : {2, 3, 5}) {
      auto a = verify_spanner(g, h, t);
      auto b = verify_spanner_serial(g, h, t);
      EXPECT_EQ(a.max_stretch, b.max_stretch);
      EXPECT_EQ(a.violating_edge, b.violating_edge);
      EXPECT_EQ(a.violations, b.violations);
    }
  }
}

TEST(PgSequence, ViolationKinds) {
  PgSequence dup{4, {{Edge(0, 1)}, {Edge(0, 1)}}};
  auto v = verify_pg_sequence(4, dup, 3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->reason, PgViolationReason::DuplicateEdge);
  EXPECT_EQ(v->round, 2u);

  PgSequence shared{4, {{Edge(0, 1), Edge(1, 2)}}};
  v = verify_pg_sequence(4, shared, 3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->reason, PgViolationReason::NotMatching);

  PgSequence close{4, {{Edge(0, 1), Edge(2, 3)}, {Edge(1, 2)}, {Edge(0, 3)}}};
  v = verify_pg_sequence(4, close, 3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->reason, PgViolationReason::PrefixDistanceAtMost);
  EXPECT_EQ(v->round, 3u);
  EXPECT_EQ(v->distance, 3u);
  EXPECT_FALSE(verify_pg_sequence(4, close, 2).has_value());
  EXPECT_FALSE(v->describe().empty());

  PgSequence out_of_range{4, {{Edge(0, 7)}}};
  EXPECT_THROW(verify_pg_sequence(4, out_of_range, 3), InputError);
}

TEST(PgSequence, AgreesWithBruteForce) {
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId n = static_cast<VertexId>(testing::draw(rng, 3, 9));
    PgSequence seq{n, {}};
    const auto rounds = testing::draw(rng, 1, 5);
    for (std::uint64_t r = 0; r < rounds; ++r) {
      auto& round = seq.rounds.emplace_back();
      const auto size = testing::draw(rng, 0, 3);
      for (std::uint64_t i = 0; i < size; ++i) {
        VertexId a = static_cast<VertexId>(rng.below(n));
        VertexId b = static_cast<VertexId>(rng.below(n));
        if (a != b) round.emplace_back(a, b);
      }
    }
    const int t = static_cast<int>(testing::draw(rng, 2, 4));
    EXPECT_EQ(!verify_pg_sequence(n, seq, t).has_value(), oracle::is_pg_sequence(n, seq, t));
  }
}

TEST(PgSequence, RestrictionKeepsValidity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testing::random_graph(30, 0.3, seed);
    GreedyConfig cfg;
    cfg.t = 3;
    cfg.seed = seed;
    auto r = parallel_greedy(g, cfg);
    CounterRng rng(seed, 9);
    std::vector<Edge> keep;
    for (const Edge& e : r.spanner.edges()) {
      if (rng.below(2)) keep.push_back(e);
    }
    auto sub = restrict_pg_sequence(r.certificate, keep);
    EXPECT_EQ(sub.rounds.size(), r.certificate.rounds.size());
    EXPECT_EQ(sub.edge_count(), keep.size());
    EXPECT_FALSE(verify_pg_sequence(30, sub, 3).has_value());
  }
}

TEST(Girth, MatchesOracleAndKnownGraphs) {
  EXPECT_EQ(girth(generate(GeneratorSpec::complete(4))), 3u);
  EXPECT_EQ(girth(generate(GeneratorSpec::petersen())), 5u);
  EXPECT_EQ(girth(generate(GeneratorSpec::hypercube(4))), 4u);
  EXPECT_EQ(girth(generate(GeneratorSpec::cycle(9))), 9u);
  EXPECT_FALSE(girth(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).has_value());
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::random_graph(11, 0.12 + 0.01 * static_cast<double>(seed % 20), seed);
    EXPECT_EQ(girth(g), oracle::girth(g)) << seed;
    EXPECT_EQ(girth_serial(g), girth(g));
  }
}

TEST(Degeneracy, MatchesOracleAndBoundsArboricity) {
  EXPECT_EQ(degeneracy(generate(GeneratorSpec::complete(4))).k, 3u);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::random_graph(10, 0.45, seed);
    auto d = degeneracy(g);
    EXPECT_EQ(d.k, oracle::degeneracy(g));
    EXPECT_EQ(d.order.size(), g.vertex_count());
    EXPECT_LE(d.densest_suffix_bound, oracle::arboricity(g));
  }
}

TEST(Arboricity, FlowMatchesSubsetsAndSandwich) {
  EXPECT_EQ(arboricity_exact(generate(GeneratorSpec::complete(4))).exact, 2u);
  EXPECT_EQ(arboricity_exact(Graph(5, {})).exact, 0u);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = testing::random_graph(9, 0.1 + 0.01 * static_cast<double>(seed), seed);
    ArboricityBudget budget;
    budget.self_check = true;
    auto a = arboricity_exact(g, budget);
    ASSERT_TRUE(a.exact);
    EXPECT_EQ(*a.exact, oracle::arboricity(g));
    EXPECT_EQ(*a.exact, arboricity_by_subsets(g));
    EXPECT_LE(a.lower, *a.exact);
    EXPECT_GE(a.upper, *a.exact);
    if (g.edge_count() > 0) {
      const auto k = degeneracy(g).k;
      EXPECT_LE(*a.exact, k);
      EXPECT_LE(k, 2 * *a.exact - 1);
    }
  }
  EXPECT_THROW(arboricity_by_subsets(generate(GeneratorSpec::cycle(13))), InputError);
}

TEST(Arboricity, FallsBackToBoundsBeyondBudget) {
  Graph q = generate(GeneratorSpec::hypercube(6));
  ArboricityBudget tiny;
  tiny.max_vertices = 10;
  auto a = arboricity_exact(q, tiny);
  EXPECT_FALSE(a.exact);
  EXPECT_LE(a.lower, a.upper);
  auto full = arboricity_exact(q);
  ASSERT_TRUE(full.exact);
  // Q_6: 192 edges on 64 vertices, densest is the whole cube.
  EXPECT_EQ(*full.exact, 4u);
  EXPECT_GE(*full.exact, a.lower);
  EXPECT_LE(*full.exact, a.upper);
}

TEST(MinDegree, CoreOfAverageHalf) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = testing::random_graph(15, 0.2, seed);
    if (g.edge_count() == 0) continue;
    auto core = min_degree_subgraph(g, average_degree(g) / 2);
    ASSERT_FALSE(core.empty());
    auto sub = induced_subgraph(g, core);
    for (VertexId v = 0; v < sub.graph.vertex_count(); ++v) {
      EXPECT_GE(Rational(sub.graph.degree(v)), average_degree(g) / 2);
    }
  }
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_TRUE(min_degree_subgraph(star, Rational(2)).empty());
  EXPECT_EQ(min_degree_subgraph(star, Rational(1)).size(), 5u);
}

TEST(MinDegree, HighDegreeFromArboricity) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = testing::random_graph(12, 0.35, seed);
    if (g.edge_count() == 0) continue;
    auto r = high_min_degree_from_arboricity(g);
    ASSERT_TRUE(r.arboricity.exact);
    EXPECT_EQ(r.threshold, Rational(*r.arboricity.exact, 2));
    ASSERT_GT(r.subgraph.graph.vertex_count(), 0u);
    for (VertexId v = 0; v < r.subgraph.graph.vertex_count(); ++v) {
      EXPECT_GE(Rational(r.subgraph.graph.degree(v)), r.threshold);
    }
  }
  EXPECT_THROW(high_min_degree_from_arboricity(Graph(3, {})), InputError);
}

}  // namespace
}  // namespace pgspan
