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

#include "pgspan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "pgspan/errors.hpp"

namespace pgspan {

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges, bool allows_self_loops)
    : vertex_count_(vertex_count), edges_(std::move(edges)), allows_self_loops_(allows_self_loops) {
  build_index();
}

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges, std::vector<Rational> lengths,
             bool allows_self_loops)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      lengths_(std::move(lengths)),
      allows_self_loops_(allows_self_loops) {
  if (lengths_.size() != edges_.size()) {
    throw InputError("length list size " + std::to_string(lengths_.size()) +
                     " does not match edge count " + std::to_string(edges_.size()));
  }
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] <= 0) {
      throw InputError("edge " + std::to_string(i) + " has non-positive length " +
                       to_string(lengths_[i]));
    }
  }
  build_index();
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count_) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n = " +
                     std::to_string(vertex_count_) + ")");
  }
}

void Graph::build_index() {
  std::vector<std::uint32_t> deg(vertex_count_, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    e = Edge(e.u, e.v);
    check_vertex(e.v);
    if (e.u == e.v) {
      if (!allows_self_loops_) {
        throw InputError("self-loop at vertex " + std::to_string(e.u) + " (edge " +
                         std::to_string(i) + ")");
      }
      ++deg[e.u];
    } else {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.assign(offsets_.back(), 0);
  edge_ids_.assign(offsets_.back(), 0);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    neighbors_[fill[e.u]] = e.v;
    edge_ids_[fill[e.u]++] = i;
    if (e.u != e.v) {
      neighbors_[fill[e.v]] = e.u;
      edge_ids_[fill[e.v]++] = i;
    }
  }
  std::vector<std::uint32_t> perm;
  std::vector<VertexId> tmp_n;
  std::vector<EdgeId> tmp_e;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    const auto lo = offsets_[v];
    const auto hi = offsets_[v + 1];
    perm.resize(hi - lo);
    std::iota(perm.begin(), perm.end(), lo);
    std::sort(perm.begin(), perm.end(),
              [&](std::uint32_t a, std::uint32_t b) { return neighbors_[a] < neighbors_[b]; });
    tmp_n.clear();
    tmp_e.clear();
    for (auto p : perm) {
      tmp_n.push_back(neighbors_[p]);
      tmp_e.push_back(edge_ids_[p]);
    }
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (k > 0 && tmp_n[k] == tmp_n[k - 1]) {
        throw InputError("duplicate edge {" + std::to_string(std::min(v, tmp_n[k])) + "," +
                         std::to_string(std::max(v, tmp_n[k])) + "}");
      }
      neighbors_[lo + k] = tmp_n[k];
      edge_ids_[lo + k] = tmp_e[k];
    }
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  if (degree(b) < degree(a)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<Rational> DistanceResult::at(VertexId v) const {
  auto it = distances.find(v);
  if (it == distances.end()) return std::nullopt;
  return it->second;
}

DistanceResult bounded_bfs(const Graph& g, VertexId source, const Rational& cap) {
  g.check_vertex(source);
  if (cap < 0) throw InputError("negative distance cap " + to_string(cap));
  DistanceResult out{source, cap, {}};
  if (g.unit_lengths()) {
    std::vector<std::int64_t> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::vector<VertexId> frontier{source};
    std::vector<VertexId> next;
    out.distances.emplace(source, 0);
    for (std::int64_t d = 1; Rational(d) <= cap && !frontier.empty(); ++d) {
      next.clear();
      for (VertexId x : frontier) {
        for (VertexId y : g.neighbors(x)) {
          if (dist[y] >= 0) continue;
          dist[y] = d;
          out.distances.emplace(y, d);
          next.push_back(y);
        }
      }
      frontier.swap(next);
    }
    return out;
  }
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<std::optional<Rational>> best(g.vertex_count());
  best[source] = Rational(0);
  pq.emplace(Rational(0), source);
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (best[x] && *best[x] < d) continue;
    if (out.distances.count(x)) continue;
    out.distances.emplace(x, d);
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      Rational nd = d + g.length(ids[k]);
      if (nd > cap) continue;
      if (!best[nb[k]] || nd < *best[nb[k]]) {
        best[nb[k]] = nd;
        pq.emplace(nd, nb[k]);
      }
    }
  }
  return out;
}

std::optional<Rational> distance_within(const Graph& g, VertexId u, VertexId v,
                                        const Rational& cap) {
  g.check_vertex(u);
  g.check_vertex(v);
  return bounded_bfs(g, u, cap).at(v);
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  for (VertexId v : keep) g.check_vertex(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr VertexId absent = ~VertexId{0};
  std::vector<VertexId> local(g.vertex_count(), absent);
  for (VertexId i = 0; i < keep.size(); ++i) local[keep[i]] = i;
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] == absent || local[ed.v] == absent) continue;
    edges.emplace_back(local[ed.u], local[ed.v]);
    if (!g.unit_lengths()) lengths.push_back(g.length(e));
  }
  const auto n = static_cast<VertexId>(keep.size());
  Graph sub = g.unit_lengths()
                  ? Graph(n, std::move(edges), g.allows_self_loops())
                  : Graph(n, std::move(edges), std::move(lengths), g.allows_self_loops());
  return {std::move(sub), std::move(keep)};
}

Components connected_components(const Graph& g) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  Components out;
  out.component_of.assign(g.vertex_count(), unset);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (out.component_of[root] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.members.size());
    auto& members = out.members.emplace_back();
    out.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (out.component_of[y] == unset) {
          out.component_of[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

}  // namespace pgspan
