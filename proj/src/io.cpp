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

#include "pgspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pgspan/errors.hpp"

namespace pgspan {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  bool weighted = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tok = split_ws(raw);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'p <n> <m>'");
      n = parse_count(tok[1], line_no, "vertex count");
      m = parse_count(tok[2], line_no, "edge count");
      if (n > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' header");
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> [w]'");
      auto u = parse_count(tok[1], line_no, "vertex id");
      auto v = parse_count(tok[2], line_no, "vertex id");
      if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      Rational w(1);
      if (tok.size() == 4) {
        try {
          w = parse_rational(tok[3]);
        } catch (const InputError& e) {
          throw ParseError(line_no, e.what());
        }
        if (w <= 0) throw ParseError(line_no, "non-positive edge length");
        weighted = true;
      }
      if (edges.size() == m) throw ParseError(line_no, "more edges than declared");
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      lengths.push_back(w);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p' header");
  if (edges.size() != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
  }
  try {
    if (weighted) return Graph(static_cast<VertexId>(n), std::move(edges), std::move(lengths));
    return Graph(static_cast<VertexId>(n), std::move(edges));
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });
  std::ostringstream buf;
  buf << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e : order) {
    buf << "e " << g.edge(e).u << ' ' << g.edge(e).v;
    if (!g.unit_lengths()) buf << ' ' << to_string(g.length(e));
    buf << '\n';
  }
  out << buf.str();
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace pgspan
