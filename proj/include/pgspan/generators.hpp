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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pgspan/graph.hpp"

namespace pgspan {

enum class Family { ErdosRenyi, Hypercube, Cycle, Complete, Grid, Petersen, FromFile };

struct GeneratorSpec {
  Family family = Family::Cycle;
  VertexId n = 0;        // ErdosRenyi, Cycle, Complete
  double p = 0.0;        // ErdosRenyi
  std::uint32_t d = 0;   // Hypercube dimension
  VertexId rows = 0;     // Grid
  VertexId cols = 0;     // Grid
  std::filesystem::path path;
  std::uint64_t seed = 0;

  static GeneratorSpec erdos_renyi(VertexId n, double p, std::uint64_t seed);
  static GeneratorSpec hypercube(std::uint32_t d);
  static GeneratorSpec cycle(VertexId n);
  static GeneratorSpec complete(VertexId n);
  static GeneratorSpec grid(VertexId rows, VertexId cols);
  static GeneratorSpec petersen();
  static GeneratorSpec from_file(std::filesystem::path path);

  /// Round-trips through parse_generator_spec.
  std::string to_string() const;
};

/// "er:<n>:<p>", "hypercube:<d>", "cycle:<n>", "complete:<n>",
/// "grid:<rows>:<cols>", "petersen", "file:<path>". The ER seed comes from the
/// caller, not the string.
GeneratorSpec parse_generator_spec(std::string_view text, std::uint64_t seed = 0);

/// Deterministic in the spec (including its seed). Throws InputError on
/// out-of-range parameters.
Graph generate(const GeneratorSpec& spec);

/// Largest n accepted by the per-pair ER sampler.
inline constexpr VertexId kMaxErdosRenyiVertices = VertexId{1} << 14;

/// The d perfect matchings of Q_d; matching i joins labels differing in bit i.
std::vector<std::vector<Edge>> hypercube_dimension_matchings(std::uint32_t d);

}  // namespace pgspan
