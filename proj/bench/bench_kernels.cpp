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

// Serial reference kernels against their OpenMP counterparts on identical
// inputs. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <vector>

#include "pgspan/generators.hpp"
#include "pgspan/greedy.hpp"
#include "pgspan/pg_analysis.hpp"

namespace {

using pgspan::Graph;

struct Instance {
  Graph g;
  Graph h;
};

/// ER(n, 32/n) and its parallel-greedy 5-spanner, cached per n.
const Instance& instance(std::int64_t n) {
  static std::map<std::int64_t, Instance> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Graph g = pgspan::generate(pgspan::GeneratorSpec::erdos_renyi(
        static_cast<pgspan::VertexId>(n), 32.0 / static_cast<double>(n), 7));
    pgspan::GreedyConfig cfg;
    cfg.t = 5;
    Graph h = pgspan::parallel_greedy(g, cfg).spanner;
    it = cache.emplace(n, Instance{std::move(g), std::move(h)}).first;
  }
  return it->second;
}

/// First-round shape: unspanned edges of g against a half-built H.
const Graph& half_spanner(std::int64_t n) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const Instance& in = instance(n);
    std::vector<pgspan::Edge> half(in.h.edges().begin(),
                                   in.h.edges().begin() + in.h.edge_count() / 2);
    it = cache.emplace(n, Graph(in.g.vertex_count(), std::move(half))).first;
  }
  return it->second;
}

void BM_UnspannedParallel(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  const auto& h = half_spanner(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::unspanned_edges(in.g, h, 5));
}

void BM_UnspannedSerial(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  const auto& h = half_spanner(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::unspanned_edges_serial(in.g, h, 5));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::verify_spanner(in.g, in.h, 5));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::verify_spanner_serial(in.g, in.h, 5));
}

void BM_GirthParallel(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::girth(in.h));
}

void BM_GirthSerial(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pgspan::girth_serial(in.h));
}

constexpr std::int64_t kLo = 1 << 9;
constexpr std::int64_t kHi = 1 << 12;

BENCHMARK(BM_UnspannedParallel)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnspannedSerial)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GirthParallel)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GirthSerial)->RangeMultiplier(4)->Range(kLo, kHi)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
