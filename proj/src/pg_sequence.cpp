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

#include "pgspan/pg_sequence.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "pgspan/errors.hpp"

namespace pgspan {

std::size_t PgSequence::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rounds) total += r.size();
  return total;
}

std::vector<Edge> PgSequence::all_edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& r : rounds) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Graph PgSequence::to_graph() const { return Graph(vertex_count, all_edges()); }

void write_certificate(std::ostream& out, const PgSequence& seq) {
  std::ostringstream buf;
  for (std::size_t i = 0; i < seq.rounds.size(); ++i) {
    buf << "r " << (i + 1) << " :";
    for (const Edge& e : seq.rounds[i]) buf << ' ' << e.u << '-' << e.v;
    buf << '\n';
  }
  out << buf.str();
}

void write_certificate(const PgSequence& seq, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_certificate(out, seq);
}

namespace {

std::uint64_t number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

PgSequence read_certificate(std::istream& in, VertexId vertex_count) {
  PgSequence seq;
  seq.vertex_count = vertex_count;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head != "r") throw ParseError(line, "unknown line type '" + head + "'");
    std::string idx;
    std::string colon;
    if (!(ls >> idx >> colon) || colon != ":") throw ParseError(line, "expected 'r <i> : ...'");
    if (number(idx, line) != seq.rounds.size() + 1) {
      throw ParseError(line, "round " + idx + " out of order");
    }
    auto& round = seq.rounds.emplace_back();
    std::string pair;
    while (ls >> pair) {
      auto dash = pair.find('-');
      if (dash == std::string::npos) throw ParseError(line, "expected 'u-v', got '" + pair + "'");
      auto u = number(std::string_view(pair).substr(0, dash), line);
      auto v = number(std::string_view(pair).substr(dash + 1), line);
      if (u >= seq.vertex_count || v >= seq.vertex_count) {
        throw ParseError(line, "vertex out of range in '" + pair + "'");
      }
      round.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return seq;
}

PgSequence read_certificate(const std::filesystem::path& path, VertexId vertex_count) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_certificate(in, vertex_count);
}

}  // namespace pgspan
