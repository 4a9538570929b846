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

#include "pgspan/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include <omp.h>

#include "pgspan/kernels.hpp"
#include "pgspan/random.hpp"

namespace pgspan {

std::string MatchingStrategy::name() const {
  switch (kind) {
    case StrategyKind::GreedyMaximal: return "greedy";
    case StrategyKind::LexicographicMaximal: return "lex";
    case StrategyKind::SingleEdge: return "single";
    case StrategyKind::Scripted: return "scripted";
    case StrategyKind::Custom: return "custom";
  }
  return "unknown";
}

MatchingStrategy parse_strategy(const std::string& name) {
  if (name == "greedy") return MatchingStrategy::greedy_maximal();
  if (name == "lex") return MatchingStrategy::lexicographic();
  if (name == "single") return MatchingStrategy::single_edge();
  if (name == "scripted") return MatchingStrategy::scripted();
  throw InputError("unknown matching strategy '" + name + "'");
}

void GreedyConfig::validate() const {
  if (t < 2) throw InputError("stretch t must be >= 2, got " + std::to_string(t));
  if (strategy.kind == StrategyKind::Custom && !strategy.custom) {
    throw InputError("custom matching strategy without a selector");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_unit(const Graph& g) {
  if (!g.unit_lengths()) throw InputError("spanner construction expects a unit-length graph");
}

/// Keeps, in order, the pool entries that are still t-unspanned in `h`.
/// Spanned entries never become unspanned again, so they are dropped for good.
template <typename Adj>
void retain_unspanned(const Graph& g, const Adj& h, std::vector<EdgeId>& pool, int t,
                      bool parallel) {
  std::vector<char> keep(pool.size(), 0);
  const auto cap = static_cast<std::uint32_t>(t);
  const auto count = static_cast<std::int64_t>(pool.size());
  if (parallel) {
#pragma omp parallel
    {
      BfsScratch scratch;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < count; ++i) {
        const Edge& e = g.edge(pool[i]);
        keep[i] = !within_hops(h, e.u, e.v, cap, scratch);
      }
    }
  } else {
    BfsScratch scratch;
    for (std::int64_t i = 0; i < count; ++i) {
      const Edge& e = g.edge(pool[i]);
      keep[i] = !hop_distance_one_sided(h, e.u, e.v, cap, scratch).has_value();
    }
  }
  std::size_t w = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (keep[i]) pool[w++] = pool[i];
  }
  pool.resize(w);
}

std::vector<EdgeId> maximal_in_order(const Graph& g, std::span<const EdgeId> order) {
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<EdgeId> out;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    out.push_back(id);
  }
  return out;
}

std::vector<EdgeId> select_matching(const Graph& g, const MatchingStrategy& strategy,
                                    std::span<const EdgeId> unspanned, std::uint64_t round_seed) {
  switch (strategy.kind) {
    case StrategyKind::GreedyMaximal: {
      std::vector<EdgeId> order(unspanned.begin(), unspanned.end());
      CounterRng rng(round_seed, 0x6d61);
      shuffle(std::span<EdgeId>(order), rng);
      return maximal_in_order(g, order);
    }
    case StrategyKind::LexicographicMaximal: {
      std::vector<EdgeId> order(unspanned.begin(), unspanned.end());
      std::sort(order.begin(), order.end(),
                [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });
      return maximal_in_order(g, order);
    }
    case StrategyKind::SingleEdge:
      return {unspanned.front()};
    case StrategyKind::Custom:
      return strategy.custom(g, unspanned, round_seed);
    case StrategyKind::Scripted:
      break;
  }
  throw InputError("scripted strategy needs scripted_parallel_greedy");
}

void check_matching_contract(const Graph& g, std::span<const EdgeId> unspanned,
                             std::span<const EdgeId> matching, std::size_t round) {
  if (matching.empty()) {
    throw InternalError("matching strategy returned no edge in round " + std::to_string(round) +
                        " although " + std::to_string(unspanned.size()) + " edges are unspanned");
  }
  std::vector<EdgeId> allowed(unspanned.begin(), unspanned.end());
  std::sort(allowed.begin(), allowed.end());
  std::vector<char> used(g.vertex_count(), 0);
  for (EdgeId id : matching) {
    if (id >= g.edge_count() || !std::binary_search(allowed.begin(), allowed.end(), id)) {
      throw InternalError("matching strategy picked edge id " + std::to_string(id) +
                          " outside the unspanned set in round " + std::to_string(round));
    }
    const Edge& e = g.edge(id);
    if (used[e.u] || used[e.v]) {
      throw InternalError("matching strategy returned a non-matching in round " +
                          std::to_string(round) + " at edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v));
    }
    used[e.u] = used[e.v] = 1;
  }
}

}  // namespace

std::vector<EdgeId> unspanned_edges(const Graph& g, const Graph& h, int t) {
  if (g.vertex_count() != h.vertex_count()) {
    throw InputError("vertex-set mismatch: g has " + std::to_string(g.vertex_count()) +
                     " vertices, h has " + std::to_string(h.vertex_count()));
  }
  std::vector<EdgeId> pool(g.edge_count());
  std::iota(pool.begin(), pool.end(), 0);
  retain_unspanned(g, h, pool, t, true);
  return pool;
}

std::vector<EdgeId> unspanned_edges_serial(const Graph& g, const Graph& h, int t) {
  if (g.vertex_count() != h.vertex_count()) {
    throw InputError("vertex-set mismatch: g has " + std::to_string(g.vertex_count()) +
                     " vertices, h has " + std::to_string(h.vertex_count()));
  }
  std::vector<EdgeId> pool(g.edge_count());
  std::iota(pool.begin(), pool.end(), 0);
  retain_unspanned(g, h, pool, t, false);
  return pool;
}

std::vector<EdgeId> scan_order(const Graph& g, const GreedyConfig& cfg) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  if (cfg.edge_order == EdgeOrder::RandomShuffle) {
    CounterRng rng(cfg.seed, 0x6f72);
    shuffle(std::span<EdgeId>(order), rng);
  }
  return order;
}

SpannerResult sequential_greedy(const Graph& g, const GreedyConfig& cfg) {
  cfg.validate();
  require_unit(g);
  const auto start = Clock::now();
  GrowingGraph h(g.vertex_count());
  SpannerResult out;
  out.certificate.vertex_count = g.vertex_count();
  BfsScratch scratch;
  const auto cap = static_cast<std::uint32_t>(cfg.t);
  for (EdgeId id : scan_order(g, cfg)) {
    const Edge& e = g.edge(id);
    const bool spanned = cfg.parallel
                             ? within_hops(h, e.u, e.v, cap, scratch)
                             : hop_distance_one_sided(h, e.u, e.v, cap, scratch).has_value();
    if (spanned) continue;
    h.add_edge(e);
    out.certificate.rounds.push_back({e});
    out.rounds.push_back({out.rounds.size() + 1, 1, h.edge_count(), millis_since(start)});
  }
  out.spanner = h.freeze();
  return out;
}

SpannerResult parallel_greedy(const Graph& g, const GreedyConfig& cfg) {
  cfg.validate();
  require_unit(g);
  if (cfg.strategy.kind == StrategyKind::Scripted) {
    throw InputError("parallel_greedy does not take a scripted strategy");
  }
  GrowingGraph h(g.vertex_count());
  SpannerResult out;
  out.certificate.vertex_count = g.vertex_count();
  std::vector<EdgeId> pool = scan_order(g, cfg);
  for (std::size_t round = 1;; ++round) {
    const auto start = Clock::now();
    retain_unspanned(g, h, pool, cfg.t, cfg.parallel);
    if (pool.empty()) break;
    const std::uint64_t round_seed = mix64(cfg.seed ^ mix64(round));
    auto matching = select_matching(g, cfg.strategy, pool, round_seed);
    check_matching_contract(g, pool, matching, round);
    auto& edges = out.certificate.rounds.emplace_back();
    for (EdgeId id : matching) {
      h.add_edge(g.edge(id));
      edges.push_back(g.edge(id));
    }
    out.rounds.push_back({round, matching.size(), h.edge_count(), millis_since(start)});
  }
  out.spanner = h.freeze();
  return out;
}

SpannerResult scripted_parallel_greedy(const Graph& g, int t,
                                       const std::vector<std::vector<Edge>>& rounds) {
  if (t < 2) throw InputError("stretch t must be >= 2, got " + std::to_string(t));
  require_unit(g);
  GrowingGraph h(g.vertex_count());
  SpannerResult out;
  out.certificate.vertex_count = g.vertex_count();
  BfsScratch scratch;
  std::vector<char> used(g.vertex_count(), 0);
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const auto start = Clock::now();
    const std::size_t round = i + 1;
    for (const Edge& raw : rounds[i]) {
      const Edge e(raw.u, raw.v);
      if (!g.has_edge(e.u, e.v)) {
        throw InputError("scripted edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " in round " + std::to_string(round) + " is not in the graph");
      }
      if (used[e.u] || used[e.v]) {
        throw ScriptViolation(round, e, "shares a vertex with an earlier edge of the round");
      }
      used[e.u] = used[e.v] = 1;
      if (auto d = hop_distance_one_sided(h, e.u, e.v, static_cast<std::uint32_t>(t), scratch)) {
        throw ScriptViolation(round, e,
                              "already " + std::to_string(t) + "-spanned at round start (distance " +
                                  std::to_string(*d) + ")");
      }
    }
    for (const Edge& raw : rounds[i]) {
      const Edge e(raw.u, raw.v);
      used[e.u] = used[e.v] = 0;
      h.add_edge(e);
    }
    out.certificate.rounds.emplace_back();
    for (const Edge& raw : rounds[i]) out.certificate.rounds.back().emplace_back(raw.u, raw.v);
    out.rounds.push_back({round, rounds[i].size(), h.edge_count(), millis_since(start)});
  }
  out.spanner = h.freeze();
  return out;
}

namespace {

/// k with 2^k <= w < 2^(k+1), exactly.
int floor_log2(const Rational& w) {
  const BigInt& num = boost::multiprecision::numerator(w);
  const BigInt& den = boost::multiprecision::denominator(w);
  int k = static_cast<int>(boost::multiprecision::msb(num)) -
          static_cast<int>(boost::multiprecision::msb(den));
  auto pow2 = [](int e) {
    return e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e);
  };
  while (pow2(k) > w) --k;
  while (pow2(k + 1) <= w) ++k;
  return k;
}

}  // namespace

WeightedSpannerResult weighted_greedy_bucketed(const Graph& g, const GreedyConfig& cfg) {
  cfg.validate();
  std::map<int, std::vector<EdgeId>> by_bucket;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rational w = g.length(e);
    if (w <= 0) throw InputError("edge " + std::to_string(e) + " has non-positive weight");
    by_bucket[floor_log2(w)].push_back(e);
  }
  WeightedSpannerResult out;
  std::vector<Edge> kept;
  std::vector<Rational> kept_lengths;
  for (auto& [exponent, ids] : by_bucket) {
    std::vector<Edge> edges;
    edges.reserve(ids.size());
    for (EdgeId e : ids) edges.push_back(g.edge(e));
    Graph bucket_graph(g.vertex_count(), std::move(edges));
    WeightBucket bucket{exponent, ids, parallel_greedy(bucket_graph, cfg)};
    for (const Edge& e : bucket.result.spanner.edges()) {
      kept.push_back(e);
      kept_lengths.push_back(g.length(*g.find_edge(e.u, e.v)));
    }
    out.buckets.push_back(std::move(bucket));
  }
  out.spanner = g.unit_lengths() ? Graph(g.vertex_count(), std::move(kept))
                                 : Graph(g.vertex_count(), std::move(kept), std::move(kept_lengths));
  return out;
}

}  // namespace pgspan
