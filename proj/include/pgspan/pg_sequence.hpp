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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "pgspan/graph.hpp"

namespace pgspan {

/// Ordered rounds of matchings E_1..E_k. Round numbers are 1-based wherever
/// they are reported.
struct PgSequence {
  VertexId vertex_count = 0;
  std::vector<std::vector<Edge>> rounds;

  std::size_t edge_count() const;
  /// Union of all rounds in round-major order.
  std::vector<Edge> all_edges() const;
  Graph to_graph() const;
};

// Certificate text format, one line per round:
//
//   r <i> : u1-v1 u2-v2 ...
//
// Rounds are numbered from 1. The vertex count is not stored; readers take it
// from the graph the certificate belongs to.

void write_certificate(std::ostream& out, const PgSequence& seq);
void write_certificate(const PgSequence& seq, const std::filesystem::path& path);
PgSequence read_certificate(std::istream& in, VertexId vertex_count);
PgSequence read_certificate(const std::filesystem::path& path, VertexId vertex_count);

}  // namespace pgspan
