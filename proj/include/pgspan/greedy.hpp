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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pgspan/errors.hpp"
#include "pgspan/graph.hpp"
#include "pgspan/pg_sequence.hpp"

namespace pgspan {

enum class EdgeOrder { Input, RandomShuffle };

enum class StrategyKind { GreedyMaximal, LexicographicMaximal, SingleEdge, Scripted, Custom };

/// Picks a matching out of the current unspanned set. `unspanned` holds
/// edge ids of g in scan order; the result must be a non-empty matching made
/// of those ids.
using MatchingSelector = std::function<std::vector<EdgeId>(
    const Graph& g, std::span<const EdgeId> unspanned, std::uint64_t round_seed)>;

struct MatchingStrategy {
  StrategyKind kind = StrategyKind::GreedyMaximal;
  MatchingSelector custom;  // only for Custom

  static MatchingStrategy greedy_maximal() { return {StrategyKind::GreedyMaximal, {}}; }
  static MatchingStrategy lexicographic() { return {StrategyKind::LexicographicMaximal, {}}; }
  static MatchingStrategy single_edge() { return {StrategyKind::SingleEdge, {}}; }
  static MatchingStrategy scripted() { return {StrategyKind::Scripted, {}}; }
  static MatchingStrategy custom_selector(MatchingSelector f) {
    return {StrategyKind::Custom, std::move(f)};
  }

  std::string name() const;
};

/// "greedy", "lex", "single", "scripted".
MatchingStrategy parse_strategy(const std::string& name);

struct GreedyConfig {
  int t = 3;
  std::uint64_t seed = 0;
  MatchingStrategy strategy;
  EdgeOrder edge_order = EdgeOrder::Input;
  /// Run the per-round unspanned tests with the OpenMP kernel.
  bool parallel = true;

  void validate() const;
};

struct RoundStats {
  std::size_t round = 0;  // 1-based
  std::size_t matching_size = 0;
  std::size_t cumulative_edges = 0;
  double millis = 0.0;
};

struct SpannerResult {
  Graph spanner;
  PgSequence certificate;
  std::vector<RoundStats> rounds;
};

/// A scripted round broke the matching property or contained an edge that was
/// already t-spanned at the start of its round.
class ScriptViolation : public Error {
 public:
  ScriptViolation(std::size_t round, Edge edge, const std::string& why)
      : Error("round " + std::to_string(round) + ", edge " + std::to_string(edge.u) + "-" +
              std::to_string(edge.v) + ": " + why),
        round_(round),
        edge_(edge) {}

  std::size_t round() const { return round_; }
  Edge edge() const { return edge_; }

 private:
  std::size_t round_;
  Edge edge_;
};

/// Edge ids of g with d_h(u,v) > t, in id order. h must share g's vertex set.
std::vector<EdgeId> unspanned_edges(const Graph& g, const Graph& h, int t);
/// Serial reference: one-sided BFS from the lower-degree endpoint.
std::vector<EdgeId> unspanned_edges_serial(const Graph& g, const Graph& h, int t);

/// Scan order of g's edge ids under `cfg.edge_order`.
std::vector<EdgeId> scan_order(const Graph& g, const GreedyConfig& cfg);

SpannerResult sequential_greedy(const Graph& g, const GreedyConfig& cfg);

/// Rounds of matchings picked by cfg.strategy among the edges that are
/// t-unspanned against H as it stood when the round began.
SpannerResult parallel_greedy(const Graph& g, const GreedyConfig& cfg);

/// Applies caller-supplied rounds after checking each against the round-start
/// H. Throws ScriptViolation on the first bad edge and InputError for edges
/// not in g. The result is a t-spanner only if the script is complete.
SpannerResult scripted_parallel_greedy(const Graph& g, int t,
                                       const std::vector<std::vector<Edge>>& rounds);

struct WeightBucket {
  int exponent = 0;  // weights in [2^exponent, 2^(exponent+1))
  std::vector<EdgeId> parent_edges;
  SpannerResult result;  // on the unit-length bucket graph, parent vertex ids
};

struct WeightedSpannerResult {
  Graph spanner;  // keeps g's lengths
  std::vector<WeightBucket> buckets;
};

/// Power-of-two weight buckets, each run through parallel_greedy as an
/// unweighted graph; the union is a 2t-spanner of g.
WeightedSpannerResult weighted_greedy_bucketed(const Graph& g, const GreedyConfig& cfg);

}  // namespace pgspan
