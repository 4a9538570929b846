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
#include <limits>
#include <vector>

namespace pgspan {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  using Cap = std::int64_t;
  static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : head_(nodes, -1) {}

  std::size_t node_count() const { return head_.size(); }

  /// Returns the arc index, usable with flow_on().
  std::size_t add_arc(std::size_t from, std::size_t to, Cap capacity);

  /// Maximum s-t flow; may be called once per instance.
  Cap run(std::size_t source, std::size_t sink);

  Cap flow_on(std::size_t arc) const { return arcs_[arc].flow; }

  /// After run(): nodes reachable from the source in the residual graph.
  std::vector<char> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    int next;
    Cap cap;
    Cap flow;
  };

  bool bfs(std::size_t s, std::size_t t);
  Cap dfs(std::size_t v, std::size_t t, Cap pushed);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace pgspan
