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

#include "pgspan/generators.hpp"

#include <charconv>
#include <sstream>

#include "pgspan/errors.hpp"
#include "pgspan/io.hpp"
#include "pgspan/random.hpp"

namespace pgspan {

GeneratorSpec GeneratorSpec::erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.family = Family::ErdosRenyi;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

GeneratorSpec GeneratorSpec::hypercube(std::uint32_t d) {
  GeneratorSpec s;
  s.family = Family::Hypercube;
  s.d = d;
  return s;
}

GeneratorSpec GeneratorSpec::cycle(VertexId n) {
  GeneratorSpec s;
  s.family = Family::Cycle;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::complete(VertexId n) {
  GeneratorSpec s;
  s.family = Family::Complete;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::grid(VertexId rows, VertexId cols) {
  GeneratorSpec s;
  s.family = Family::Grid;
  s.rows = rows;
  s.cols = cols;
  return s;
}

GeneratorSpec GeneratorSpec::petersen() {
  GeneratorSpec s;
  s.family = Family::Petersen;
  return s;
}

GeneratorSpec GeneratorSpec::from_file(std::filesystem::path path) {
  GeneratorSpec s;
  s.family = Family::FromFile;
  s.path = std::move(path);
  return s;
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::ErdosRenyi: out << "er:" << n << ':' << p; break;
    case Family::Hypercube: out << "hypercube:" << d; break;
    case Family::Cycle: out << "cycle:" << n; break;
    case Family::Complete: out << "complete:" << n; break;
    case Family::Grid: out << "grid:" << rows << ':' << cols; break;
    case Family::Petersen: out << "petersen"; break;
    case Family::FromFile: out << "file:" << path.string(); break;
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::uint32_t to_u32(std::string_view tok, std::string_view spec) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("bad integer '" + std::string(tok) + "' in generator '" + std::string(spec) + "'");
  }
  return v;
}

double to_prob(std::string_view tok, std::string_view spec) {
  try {
    std::size_t used = 0;
    double v = std::stod(std::string(tok), &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("bad probability '" + std::string(tok) + "' in generator '" + std::string(spec) + "'");
  }
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text, std::uint64_t seed) {
  if (text.rfind("file:", 0) == 0) return GeneratorSpec::from_file(std::string(text.substr(5)));
  auto parts = split_colon(text);
  const auto& name = parts[0];
  auto want = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw InputError("generator '" + std::string(text) + "' expects " + std::to_string(k) +
                       " parameter(s)");
    }
  };
  if (name == "er") {
    want(2);
    return GeneratorSpec::erdos_renyi(to_u32(parts[1], text), to_prob(parts[2], text), seed);
  }
  if (name == "hypercube") {
    want(1);
    return GeneratorSpec::hypercube(to_u32(parts[1], text));
  }
  if (name == "cycle") {
    want(1);
    return GeneratorSpec::cycle(to_u32(parts[1], text));
  }
  if (name == "complete") {
    want(1);
    return GeneratorSpec::complete(to_u32(parts[1], text));
  }
  if (name == "grid") {
    want(2);
    return GeneratorSpec::grid(to_u32(parts[1], text), to_u32(parts[2], text));
  }
  if (name == "petersen") {
    want(0);
    return GeneratorSpec::petersen();
  }
  throw InputError("unknown generator family '" + std::string(name) + "'");
}

std::vector<std::vector<Edge>> hypercube_dimension_matchings(std::uint32_t d) {
  if (d == 0 || d > 24) throw InputError("hypercube dimension must be in 1..24");
  const VertexId n = VertexId{1} << d;
  std::vector<std::vector<Edge>> out(d);
  for (std::uint32_t bit = 0; bit < d; ++bit) {
    for (VertexId x = 0; x < n; ++x) {
      if ((x >> bit & 1U) == 0) out[bit].emplace_back(x, x | (VertexId{1} << bit));
    }
  }
  return out;
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::ErdosRenyi: {
      if (spec.n == 0 || spec.n > kMaxErdosRenyiVertices) {
        throw InputError("ErdosRenyi n must be in 1..16384");
      }
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InputError("ErdosRenyi p must be in [0,1]");
      CounterRng rng(spec.seed, 0x4552);
      std::vector<Edge> edges;
      std::uint64_t index = 0;
      for (VertexId u = 0; u < spec.n; ++u) {
        for (VertexId v = u + 1; v < spec.n; ++v, ++index) {
          if (rng.unit_at(index) < spec.p) edges.emplace_back(u, v);
        }
      }
      return Graph(spec.n, std::move(edges));
    }
    case Family::Hypercube: {
      auto matchings = hypercube_dimension_matchings(spec.d);
      std::vector<Edge> edges;
      for (const auto& m : matchings) edges.insert(edges.end(), m.begin(), m.end());
      return Graph(VertexId{1} << spec.d, std::move(edges));
    }
    case Family::Cycle: {
      if (spec.n < 3) throw InputError("cycle needs n >= 3");
      std::vector<Edge> edges;
      for (VertexId i = 0; i < spec.n; ++i) edges.emplace_back(i, (i + 1) % spec.n);
      return Graph(spec.n, std::move(edges));
    }
    case Family::Complete: {
      if (spec.n == 0) throw InputError("complete graph needs n >= 1");
      std::vector<Edge> edges;
      for (VertexId u = 0; u < spec.n; ++u) {
        for (VertexId v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      }
      return Graph(spec.n, std::move(edges));
    }
    case Family::Grid: {
      if (spec.rows == 0 || spec.cols == 0) throw InputError("grid needs positive dimensions");
      std::vector<Edge> edges;
      auto id = [&](VertexId r, VertexId c) { return r * spec.cols + c; };
      for (VertexId r = 0; r < spec.rows; ++r) {
        for (VertexId c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
      }
      return Graph(spec.rows * spec.cols, std::move(edges));
    }
    case Family::Petersen: {
      // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
      std::vector<Edge> edges;
      for (VertexId i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
      for (VertexId i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      for (VertexId i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
      return Graph(10, std::move(edges));
    }
    case Family::FromFile:
      return read_graph(spec.path);
  }
  throw InputError("unknown generator family");
}

}  // namespace pgspan
