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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgspan/graph.hpp"
#include "pgspan/pg_sequence.hpp"
#include "pgspan/rational.hpp"

namespace pgspan {

/// Per-edge stretch of h against g, with distances resolved up to t.
struct StretchReport {
  int t = 0;
  /// Largest d_h(u,v) over edges {u,v} of g; nullopt when some edge exceeds t.
  std::optional<std::uint32_t> max_stretch;
  /// First edge of g (by id) with d_h > t.
  std::optional<Edge> violating_edge;
  std::size_t violations = 0;

  bool valid() const { return max_stretch.has_value(); }
  /// "3" or ">3".
  std::string max_stretch_string() const;
};

/// Checking edges suffices: a shortest path in g is covered edge by edge.
/// Throws InputError if h is not a subgraph of g on the same vertex set.
StretchReport verify_spanner(const Graph& g, const Graph& h, int t);
StretchReport verify_spanner_serial(const Graph& g, const Graph& h, int t);

enum class PgViolationReason { NotMatching, PrefixDistanceAtMost, DuplicateEdge };

struct PgViolation {
  std::size_t round = 0;  // 1-based
  Edge edge;
  PgViolationReason reason = PgViolationReason::NotMatching;
  /// Prefix-graph distance for PrefixDistanceAtMost.
  std::uint32_t distance = 0;

  std::string describe() const;
};

/// nullopt when seq is a t-pg sequence on n vertices; otherwise the first
/// violation in round-major, edge-minor order.
std::optional<PgViolation> verify_pg_sequence(VertexId n, const PgSequence& seq, int t);

/// Intersects every round with `keep` (kept rounds may become empty; they
/// stay in place so round numbers are preserved).
PgSequence restrict_pg_sequence(const PgSequence& seq, std::span<const Edge> keep);

/// Exact girth of a unit-length graph; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);
std::optional<std::uint32_t> girth_serial(const Graph& g);

struct Degeneracy {
  std::uint32_t k = 0;
  std::vector<VertexId> order;  // elimination order
  /// max over peeled suffixes U of ceil(|E(U)| / (|U|-1)); a lower bound on arboricity.
  std::uint32_t densest_suffix_bound = 0;
};

/// Min-degree peeling; ties broken by lowest vertex id.
Degeneracy degeneracy(const Graph& g);

struct ArboricityBudget {
  /// Exact computation only when n is at most this.
  VertexId max_vertices = 512;
  /// Cross-check the flow answer against subset enumeration when n <= 12.
  bool self_check = false;
};

struct ArboricityResult {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  std::optional<std::uint32_t> exact;
};

/// Nash-Williams arboricity max_U ceil(|E(U)|/(|U|-1)) by binary search over
/// max-flow density tests; falls back to degeneracy bounds beyond the budget.
ArboricityResult arboricity_exact(const Graph& g, ArboricityBudget budget = {});

/// Subset enumeration over all U with |U| >= 2; n <= 12.
std::uint32_t arboricity_by_subsets(const Graph& g);

/// Vertices of the maximal induced subgraph with minimum degree >= threshold
/// (the ceil(threshold)-core), sorted; possibly empty.
std::vector<VertexId> min_degree_subgraph(const Graph& g, const Rational& threshold);

/// Average degree 2m/n.
Rational average_degree(const Graph& g);

struct HighDegreeSubgraph {
  Subgraph subgraph;
  ArboricityResult arboricity;
  /// alpha/2 where alpha is exact, else the best lower bound over 2.
  Rational threshold;
};

/// Throws InternalError if the result is empty while alpha is exact.
HighDegreeSubgraph high_min_degree_from_arboricity(const Graph& g, ArboricityBudget budget = {});

}  // namespace pgspan
