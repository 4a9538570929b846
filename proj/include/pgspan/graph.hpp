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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pgspan/rational.hpp"

namespace pgspan {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge, stored with the lower endpoint first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(VertexId x) const { return u == x || v == x; }
  constexpr bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Immutable undirected graph on vertices 0..n-1.
///
/// Edge ids follow construction order. Each vertex's incidence list is sorted
/// by neighbor id, which fixes every traversal order. Lengths default to 1;
/// a graph built with explicit lengths keeps them as exact rationals.
/// Self-loops are only accepted when `allows_self_loops` is set, and appear
/// once in their vertex's incidence list.
class Graph {
 public:
  Graph() = default;
  Graph(VertexId vertex_count, std::vector<Edge> edges, bool allows_self_loops = false);
  Graph(VertexId vertex_count, std::vector<Edge> edges, std::vector<Rational> lengths,
        bool allows_self_loops = false);

  VertexId vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool allows_self_loops() const { return allows_self_loops_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool unit_lengths() const { return lengths_.empty(); }
  Rational length(EdgeId e) const { return lengths_.empty() ? Rational(1) : lengths_[e]; }
  std::span<const Rational> lengths() const { return lengths_; }

  std::uint32_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], degree(v)};
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Throws InputError when v is not a vertex of this graph.
  void check_vertex(VertexId v) const;

 private:
  void build_index();

  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> lengths_;
  bool allows_self_loops_ = false;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> edge_ids_;
};

/// Ball of radius `cap` around `source`; vertices beyond the cap are absent.
struct DistanceResult {
  VertexId source = 0;
  Rational cap;
  std::map<VertexId, Rational> distances;

  std::optional<Rational> at(VertexId v) const;
};

/// BFS for unit lengths, Dijkstra truncated at `cap` otherwise.
DistanceResult bounded_bfs(const Graph& g, VertexId source, const Rational& cap);

/// d_g(u,v) when it is at most `cap`; nullopt means "greater than cap".
std::optional<Rational> distance_within(const Graph& g, VertexId u, VertexId v,
                                        const Rational& cap);

/// Induced subgraph with vertex ids remapped to 0..|U|-1 in increasing order
/// of the original id.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Components numbered in increasing order of their smallest vertex.
struct Components {
  std::vector<std::uint32_t> component_of;
  std::vector<std::vector<VertexId>> members;

  std::size_t count() const { return members.size(); }
};

Components connected_components(const Graph& g);

}  // namespace pgspan
