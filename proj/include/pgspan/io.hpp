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

#include "pgspan/graph.hpp"

namespace pgspan {

// Edge-list text format:
//
//   # comment
//   p <n> <m>
//   e <u> <v> [length]
//
// Ids are 0-based. Lengths are integers, fractions "a/b" or decimals; a file
// with any explicit length yields a weighted graph (missing lengths are 1).
// The writer emits the canonical form: edges sorted, lowest endpoint first,
// lengths only for weighted graphs, LF line endings.

Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace pgspan
