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

#include "pgspan/pg_analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <omp.h>

#include "pgspan/errors.hpp"
#include "pgspan/kernels.hpp"
#include "pgspan/maxflow.hpp"

namespace pgspan {

std::string StretchReport::max_stretch_string() const {
  return max_stretch ? std::to_string(*max_stretch) : ">" + std::to_string(t);
}

namespace {

void check_subgraph(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    throw InputError("vertex-set mismatch: g has " + std::to_string(g.vertex_count()) +
                     " vertices, h has " + std::to_string(h.vertex_count()));
  }
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("h is not a subgraph of g: edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " missing from g");
    }
  }
}

StretchReport summarize(const Graph& g, int t, const std::vector<std::uint32_t>& dist) {
  constexpr std::uint32_t beyond = ~std::uint32_t{0};
  StretchReport r;
  r.t = t;
  std::uint32_t worst = 0;
  for (EdgeId e = 0; e < dist.size(); ++e) {
    if (dist[e] == beyond) {
      if (!r.violating_edge) r.violating_edge = g.edge(e);
      ++r.violations;
    } else {
      worst = std::max(worst, dist[e]);
    }
  }
  if (r.violations == 0) r.max_stretch = worst;
  return r;
}

StretchReport verify_impl(const Graph& g, const Graph& h, int t, bool parallel) {
  check_subgraph(g, h);
  if (t < 1) throw InputError("stretch t must be >= 1");
  constexpr std::uint32_t beyond = ~std::uint32_t{0};
  std::vector<std::uint32_t> dist(g.edge_count(), beyond);
  const auto cap = static_cast<std::uint32_t>(t);
  const auto m = static_cast<std::int64_t>(g.edge_count());
#pragma omp parallel if (parallel)
  {
    BfsScratch scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t e = 0; e < m; ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      if (auto d = hop_distance_one_sided(h, ed.u, ed.v, cap, scratch)) dist[e] = *d;
    }
  }
  return summarize(g, t, dist);
}

}  // namespace

StretchReport verify_spanner(const Graph& g, const Graph& h, int t) {
  return verify_impl(g, h, t, true);
}

StretchReport verify_spanner_serial(const Graph& g, const Graph& h, int t) {
  return verify_impl(g, h, t, false);
}

std::string PgViolation::describe() const {
  std::string where = "round " + std::to_string(round) + ", edge " + std::to_string(edge.u) + "-" +
                      std::to_string(edge.v) + ": ";
  switch (reason) {
    case PgViolationReason::NotMatching: return where + "round is not a matching";
    case PgViolationReason::DuplicateEdge: return where + "edge already present";
    case PgViolationReason::PrefixDistanceAtMost:
      return where + "prefix distance " + std::to_string(distance) + " is within t";
  }
  return where;
}

std::optional<PgViolation> verify_pg_sequence(VertexId n, const PgSequence& seq, int t) {
  if (t < 2) throw InputError("stretch t must be >= 2, got " + std::to_string(t));
  GrowingGraph prefix(n);
  std::set<Edge> present;
  BfsScratch scratch;
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < seq.rounds.size(); ++i) {
    const std::size_t round = i + 1;
    const auto& edges = seq.rounds[i];
    for (const Edge& raw : edges) {
      const Edge e(raw.u, raw.v);
      if (e.v >= n) {
        throw InputError("certificate edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " references a vertex >= " + std::to_string(n));
      }
      if (e.u == e.v) return PgViolation{round, e, PgViolationReason::PrefixDistanceAtMost, 0};
      if (present.count(e)) return PgViolation{round, e, PgViolationReason::DuplicateEdge, 1};
      if (used[e.u] || used[e.v]) return PgViolation{round, e, PgViolationReason::NotMatching, 0};
      used[e.u] = used[e.v] = 1;
      present.insert(e);
      if (auto d = hop_distance_one_sided(prefix, e.u, e.v, static_cast<std::uint32_t>(t), scratch)) {
        return PgViolation{round, e, PgViolationReason::PrefixDistanceAtMost, *d};
      }
    }
    for (const Edge& raw : edges) {
      const Edge e(raw.u, raw.v);
      used[e.u] = used[e.v] = 0;
      prefix.add_edge(e);
    }
  }
  return std::nullopt;
}

PgSequence restrict_pg_sequence(const PgSequence& seq, std::span<const Edge> keep) {
  std::vector<Edge> sorted;
  sorted.reserve(keep.size());
  for (const Edge& e : keep) sorted.emplace_back(e.u, e.v);
  std::sort(sorted.begin(), sorted.end());
  PgSequence out;
  out.vertex_count = seq.vertex_count;
  out.rounds.reserve(seq.rounds.size());
  for (const auto& round : seq.rounds) {
    auto& kept = out.rounds.emplace_back();
    for (const Edge& raw : round) {
      const Edge e(raw.u, raw.v);
      if (std::binary_search(sorted.begin(), sorted.end(), e)) kept.push_back(e);
    }
  }
  return out;
}

namespace {

/// Shortest cycle found by BFS from `root`, pruned once no cycle shorter than
/// `best` can appear.
std::uint32_t shortest_cycle_from(const Graph& g, VertexId root, std::uint32_t best,
                                  std::vector<std::uint32_t>& dist, std::vector<VertexId>& parent,
                                  std::vector<VertexId>& queue) {
  constexpr std::uint32_t unseen = ~std::uint32_t{0};
  queue.clear();
  queue.push_back(root);
  dist[root] = 0;
  parent[root] = root;
  std::uint32_t found = best;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    if (2 * dist[x] + 1 >= found) break;
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == unseen) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      } else if (parent[x] != y) {
        found = std::min(found, dist[x] + dist[y] + 1);
      }
    }
  }
  for (VertexId v : queue) dist[v] = unseen;
  return found;
}

std::optional<std::uint32_t> girth_impl(const Graph& g, bool parallel) {
  if (!g.unit_lengths()) throw InputError("girth expects a unit-length graph");
  constexpr std::uint32_t none = ~std::uint32_t{0};
  std::uint32_t best = none;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint32_t> dist(g.vertex_count(), none);
    std::vector<VertexId> parent(g.vertex_count(), 0);
    std::vector<VertexId> queue;
    std::uint32_t local = none;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < n; ++r) {
      std::uint32_t bound;
#pragma omp atomic read
      bound = best;
      const auto c =
          shortest_cycle_from(g, static_cast<VertexId>(r), std::min(bound, local), dist, parent, queue);
      if (c < local) {
        local = c;
#pragma omp critical(pgspan_girth)
        best = std::min(best, local);
      }
    }
  }
  if (best == none) return std::nullopt;
  return best;
}

}  // namespace

std::optional<std::uint32_t> girth(const Graph& g) { return girth_impl(g, true); }
std::optional<std::uint32_t> girth_serial(const Graph& g) { return girth_impl(g, false); }

namespace {

std::uint32_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint32_t>((a + b - 1) / b);
}

}  // namespace

Degeneracy degeneracy(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  Degeneracy out;
  out.order.reserve(n);
  std::uint64_t edges_left = g.edge_count();
  std::uint64_t vertices_left = n;
  while (!queue.empty()) {
    if (vertices_left >= 2) {
      out.densest_suffix_bound =
          std::max(out.densest_suffix_bound, ceil_div(edges_left, vertices_left - 1));
    }
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.k = std::max(out.k, d);
    out.order.push_back(v);
    removed[v] = 1;
    edges_left -= d;
    --vertices_left;
    for (VertexId y : g.neighbors(v)) {
      if (removed[y]) continue;
      queue.erase({deg[y], y});
      --deg[y];
      queue.emplace(deg[y], y);
    }
  }
  return out;
}

namespace {

/// True iff |E(U)| <= a (|U| - 1) for every vertex set U.
bool within_density(const Graph& g, std::uint32_t a) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  for (VertexId root = 0; root < n; ++root) {
    if (g.degree(root) == 0) continue;
    // Nodes: 0 = source, 1 = sink, 2..2+m = edges, then vertices.
    MaxFlow flow(2 + m + n);
    for (EdgeId e = 0; e < m; ++e) {
      flow.add_arc(0, 2 + e, 1);
      flow.add_arc(2 + e, 2 + m + g.edge(e).u, MaxFlow::kInfinite);
      flow.add_arc(2 + e, 2 + m + g.edge(e).v, MaxFlow::kInfinite);
    }
    for (VertexId v = 0; v < n; ++v) {
      if (v != root) flow.add_arc(2 + m + v, 1, a);
    }
    // min cut = min over U of (m - |E(U)|) + a |U \ {root}|.
    if (flow.run(0, 1) < static_cast<MaxFlow::Cap>(m)) return false;
  }
  return true;
}

}  // namespace

std::uint32_t arboricity_by_subsets(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n > 12) throw InputError("subset enumeration is limited to n <= 12");
  std::vector<std::uint32_t> masks;
  for (const Edge& e : g.edges()) masks.push_back((1U << e.u) | (1U << e.v));
  std::uint32_t best = 0;
  for (std::uint32_t set = 0; set < (1U << n); ++set) {
    const auto size = static_cast<std::uint32_t>(std::popcount(set));
    if (size < 2) continue;
    std::uint32_t inside = 0;
    for (auto mask : masks) inside += (mask & set) == mask;
    best = std::max(best, ceil_div(inside, size - 1));
  }
  return best;
}

ArboricityResult arboricity_exact(const Graph& g, ArboricityBudget budget) {
  if (g.edge_count() == 0) return {0, 0, 0U};
  const Degeneracy deg = degeneracy(g);
  ArboricityResult out;
  out.upper = deg.k;
  out.lower = std::max(deg.densest_suffix_bound, (deg.k + 2) / 2);
  if (g.vertex_count() > budget.max_vertices) return out;
  std::uint32_t lo = out.lower;
  std::uint32_t hi = out.upper;
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (within_density(g, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  out.exact = lo;
  out.lower = out.upper = lo;
  if (budget.self_check && g.vertex_count() <= 12) {
    const auto check = arboricity_by_subsets(g);
    if (check != lo) {
      throw InternalError("arboricity flow result " + std::to_string(lo) +
                          " disagrees with subset enumeration " + std::to_string(check));
    }
  }
  return out;
}

std::vector<VertexId> min_degree_subgraph(const Graph& g, const Rational& threshold) {
  const VertexId n = g.vertex_count();
  if (threshold < 0) throw InputError("negative degree threshold");
  // Integer degrees: deg < threshold iff deg < ceil(threshold).
  const BigInt need = ceil(threshold);
  auto below = [&](std::uint32_t d) { return BigInt(d) < need; };
  std::vector<std::uint32_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (below(deg[v])) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(v)) {
      if (removed[y]) continue;
      if (below(--deg[y])) {
        removed[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) out.push_back(v);
  }
  return out;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) return Rational(0);
  return Rational(2 * static_cast<std::uint64_t>(g.edge_count()),
                  static_cast<std::uint64_t>(g.vertex_count()));
}

HighDegreeSubgraph high_min_degree_from_arboricity(const Graph& g, ArboricityBudget budget) {
  if (g.edge_count() == 0) throw InputError("graph has no edges");
  HighDegreeSubgraph out;
  out.arboricity = arboricity_exact(g, budget);
  const std::uint32_t alpha = out.arboricity.exact.value_or(out.arboricity.lower);
  out.threshold = Rational(alpha, 2);
  auto keep = min_degree_subgraph(g, out.threshold);
  if (keep.empty() && out.arboricity.exact) {
    throw InternalError("no induced subgraph of minimum degree alpha/2 = " +
                        to_string(out.threshold) + " although alpha is exact");
  }
  out.subgraph = induced_subgraph(g, keep);
  return out;
}

}  // namespace pgspan
