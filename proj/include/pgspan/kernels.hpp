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

// Hop-distance kernels shared by construction and verification. Each comes in
// a one-sided reference form and a faster bidirectional form; both answer the
// predicate d(u,v) <= cap exactly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgspan/graph.hpp"

namespace pgspan {

/// Append-only adjacency used for the partial spanner H while it grows.
class GrowingGraph {
 public:
  explicit GrowingGraph(VertexId n = 0) : adj_(n) {}

  VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  std::span<const Edge> edges() const { return edges_; }

  void add_edge(Edge e) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edges_.push_back(e);
  }

  Graph freeze() const { return Graph(vertex_count(), edges_); }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

/// Per-thread scratch: epoch-stamped marks avoid clearing between queries.
class BfsScratch {
 public:
  void reset(VertexId n) {
    if (stamp_.size() < n) {
      stamp_.assign(n, 0);
      side_.assign(n, 0);
      dist_.assign(n, 0);
      epoch_ = 0;
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    frontier_.clear();
    next_.clear();
  }

  bool seen(VertexId v) const { return stamp_[v] == epoch_; }
  void mark(VertexId v, std::uint8_t side, std::uint32_t d) {
    stamp_[v] = epoch_;
    side_[v] = side;
    dist_[v] = d;
  }
  std::uint8_t side(VertexId v) const { return side_[v]; }
  std::uint32_t dist(VertexId v) const { return dist_[v]; }

  std::vector<VertexId> frontier_;
  std::vector<VertexId> next_;
  std::vector<VertexId> other_frontier_;

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t epoch_ = 0;
};

/// Reference kernel: BFS from the lower-degree endpoint, stopped at `cap` hops.
template <typename Adj>
std::optional<std::uint32_t> hop_distance_one_sided(const Adj& adj, VertexId u, VertexId v,
                                                    std::uint32_t cap, BfsScratch& s) {
  if (u == v) return 0;
  if (adj.degree(v) < adj.degree(u)) std::swap(u, v);
  s.reset(adj.vertex_count());
  s.mark(u, 0, 0);
  s.frontier_.push_back(u);
  for (std::uint32_t d = 1; d <= cap && !s.frontier_.empty(); ++d) {
    s.next_.clear();
    for (VertexId x : s.frontier_) {
      for (VertexId y : adj.neighbors(x)) {
        if (s.seen(y)) continue;
        if (y == v) return d;
        s.mark(y, 0, d);
        s.next_.push_back(y);
      }
    }
    std::swap(s.frontier_, s.next_);
  }
  return std::nullopt;
}

/// Bidirectional kernel: grows the cheaper side each step; true iff d(u,v) <= cap.
template <typename Adj>
bool within_hops(const Adj& adj, VertexId u, VertexId v, std::uint32_t cap, BfsScratch& s) {
  if (u == v) return true;
  if (cap == 0) return false;
  s.reset(adj.vertex_count());
  auto& fu = s.frontier_;
  auto& fv = s.other_frontier_;
  fv.clear();
  s.mark(u, 1, 0);
  s.mark(v, 2, 0);
  fu.push_back(u);
  fv.push_back(v);
  std::uint32_t ru = 0;
  std::uint32_t rv = 0;
  while (ru + rv < cap && !fu.empty() && !fv.empty()) {
    std::uint64_t work_u = 0;
    std::uint64_t work_v = 0;
    for (VertexId x : fu) work_u += adj.degree(x);
    for (VertexId x : fv) work_v += adj.degree(x);
    const bool grow_u = work_u <= work_v;
    auto& frontier = grow_u ? fu : fv;
    const std::uint8_t mine = grow_u ? 1 : 2;
    const std::uint32_t next_radius = (grow_u ? ru : rv) + 1;
    s.next_.clear();
    for (VertexId x : frontier) {
      for (VertexId y : adj.neighbors(x)) {
        if (s.seen(y)) {
          // Meeting the other side: path length = next_radius + dist(y) <= ru + rv + 1 <= cap.
          if (s.side(y) != mine) return true;
          continue;
        }
        s.mark(y, mine, next_radius);
        s.next_.push_back(y);
      }
    }
    std::swap(frontier, s.next_);
    (grow_u ? ru : rv) = next_radius;
  }
  return false;
}

}  // namespace pgspan
