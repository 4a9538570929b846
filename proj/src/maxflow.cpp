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

#include "pgspan/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace pgspan {

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, Cap capacity) {
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, head_[from], capacity, 0});
  head_[from] = static_cast<int>(id);
  arcs_.push_back({from, head_[to], 0, 0});
  head_[to] = static_cast<int>(id + 1);
  return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  level_.assign(head_.size(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        q.push(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

MaxFlow::Cap MaxFlow::dfs(std::size_t v, std::size_t t, Cap pushed) {
  if (v == t) return pushed;
  for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.cap - arc.flow <= 0 || level_[arc.to] != level_[v] + 1) continue;
    Cap got = dfs(arc.to, t, std::min(pushed, arc.cap - arc.flow));
    if (got > 0) {
      arc.flow += got;
      arcs_[a ^ 1].flow -= got;
      return got;
    }
  }
  return 0;
}

MaxFlow::Cap MaxFlow::run(std::size_t source, std::size_t sink) {
  Cap total = 0;
  while (bfs(source, sink)) {
    iter_ = head_;
    while (Cap f = dfs(source, sink, kInfinite)) total += f;
  }
  return total;
}

std::vector<char> MaxFlow::source_side(std::size_t source) const {
  std::vector<char> seen(head_.size(), 0);
  std::queue<std::size_t> q;
  seen[source] = 1;
  q.push(source);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        q.push(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace pgspan
