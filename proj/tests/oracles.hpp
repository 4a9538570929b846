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

// Independent brute-force references used only by the tests. Nothing here
// calls into the library's algorithms beyond the Graph container.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgspan/graph.hpp"
#include "pgspan/lc_cuts.hpp"
#include "pgspan/pg_sequence.hpp"
#include "pgspan/rational.hpp"

namespace pgspan::oracle {

using Matrix = std::vector<std::vector<std::optional<Rational>>>;

/// Floyd-Warshall over the graph's edge lengths; nullopt means unreachable.
Matrix all_pairs(const Graph& g);
/// Same with lengths l(e) + extra[e].
Matrix all_pairs(const Graph& g, const std::vector<Rational>& extra);

/// min over edges {u,v} of 1 + d_{G-e}(u,v); nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

/// max over U of min degree in G[U] by subset enumeration; n <= 14.
std::uint32_t degeneracy(const Graph& g);
/// Nash-Williams by subset enumeration; n <= 14.
std::uint32_t arboricity(const Graph& g);

/// Sequential greedy in the given edge order with Floyd-Warshall distance
/// queries.
std::vector<Edge> sequential_greedy(const Graph& g, const std::vector<EdgeId>& order, int t);
/// t-pg check by recomputing prefix distances from scratch.
bool is_pg_sequence(VertexId n, const PgSequence& seq, int t);

/// max over unit h-length demands of sep_{hs}, by the Gale/Hall subset bound
/// over sender sets. n <= 12.
Rational max_separated(const Graph& g, const MovingCut& cut, std::uint32_t h, std::uint32_t s);
/// sep_h(C, D) from all-pairs distances in G - C.
Rational separated(const Graph& g, const MovingCut& cut, const Demand& d, const Rational& h);

/// Exact minimum congestion of routing `demand` on simple paths of at most
/// max_hops edges, by a rational two-phase simplex. nullopt when some pair has
/// no such path.
std::optional<Rational> min_congestion(const Graph& g, const Demand& demand, std::uint32_t max_hops);

/// Every simple u-v path with at most max_hops edges, by plain recursion.
std::vector<std::vector<VertexId>> simple_paths(const Graph& g, VertexId u, VertexId v,
                                                std::uint32_t max_hops);

}  // namespace pgspan::oracle
