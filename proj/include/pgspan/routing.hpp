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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgspan/graph.hpp"
#include "pgspan/lc_cuts.hpp"
#include "pgspan/pg_sequence.hpp"
#include "pgspan/rational.hpp"

namespace pgspan {

/// Simple u-v paths with at most `max_hops` edges, as vertex lists, in DFS
/// order over sorted adjacency. Unit-length graphs only. Throws ResourceError
/// once more than `limit` paths exist.
std::vector<std::vector<VertexId>> enumerate_paths(const Graph& g, VertexId u, VertexId v,
                                                   std::uint32_t max_hops, std::size_t limit);

struct RoutingOptions {
  double epsilon = 0.05;
  std::size_t max_paths_per_pair = 1'000'000;
  /// Phase budget is ceil(iteration_constant * ln(1 + paths) / epsilon^2).
  double iteration_constant = 4.0;
};

struct RoutingResult {
  bool feasible = false;
  /// Present only when feasible; routes the demand exactly and has passed the
  /// exact congestion, dilation and demand recheck.
  std::optional<Flow> flow;
  /// Exact congestion of `flow`, or of the best rounded candidate when
  /// infeasible.
  std::optional<Rational> congestion;
  /// Bounds on the least congestion achievable within the hop budget.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::size_t phases = 0;
  std::size_t paths = 0;
};

/// Decides whether `demand` is routable with dilation <= max_hops and
/// congestion <= cap, up to a (1 + epsilon) margin: reports feasible whenever
/// the optimum is at most cap / (1 + epsilon), and never reports feasible
/// unless the returned flow meets cap exactly.
RoutingResult route_demand(const Graph& g, const Demand& demand, std::uint32_t max_hops,
                           const Rational& cap, const RoutingOptions& options = {});

/// The matching demand: delta from the lower to the higher endpoint of each
/// edge of `matching`. Throws InputError when `matching` is not a matching of g.
Demand matching_demand(const Graph& g, std::span<const Edge> matching, const Rational& delta);

RoutingResult route_matching(const Graph& g, std::span<const Edge> matching, const Rational& delta,
                             std::uint32_t t, const Rational& cap,
                             const RoutingOptions& options = {});

struct ContradictionProbe {
  RoutingResult routing;
  /// A flow-path avoiding every edge of the last round.
  std::optional<FlowPath> witness;
};

/// Routes the last non-empty round of `seq` in h_graph with value delta_prime,
/// dilation t and congestion delta_prime / 2, then looks for a flow-path that
/// avoids the round. On a valid sequence such a path would contradict the
/// round's prefix-distance condition.
ContradictionProbe pg_contradiction_probe(const Graph& h_graph, const PgSequence& seq,
                                          std::uint32_t t, const Rational& delta_prime,
                                          const RoutingOptions& options = {});

}  // namespace pgspan
