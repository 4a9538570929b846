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
#include <vector>

#include "pgspan/graph.hpp"
#include "pgspan/random.hpp"

namespace pgspan::testing {

/// G(n, p) from a counter stream; used for property sweeps.
inline Graph random_graph(VertexId n, double p, std::uint64_t seed) {
  CounterRng rng(seed, 0x7465);
  std::vector<Edge> edges;
  std::uint64_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.unit_at(idx++) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// Uniform draw in [lo, hi].
inline std::uint64_t draw(CounterRng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng.below(hi - lo + 1);
}

}  // namespace pgspan::testing
