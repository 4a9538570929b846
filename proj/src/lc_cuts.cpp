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

#include "pgspan/lc_cuts.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pgspan/errors.hpp"
#include "pgspan/maxflow.hpp"

namespace pgspan {

MovingCut::MovingCut(std::uint32_t h) : h_(h) {
  if (h == 0) throw InputError("moving cut needs h >= 1");
}

void MovingCut::set(EdgeId e, std::uint32_t numerator) {
  if (numerator > h_) {
    throw InputError("cut value " + std::to_string(numerator) + "/" + std::to_string(h_) +
                     " exceeds 1");
  }
  if (numerator == 0) {
    values_.erase(e);
  } else {
    values_[e] = numerator;
  }
}

std::uint32_t MovingCut::numerator(EdgeId e) const {
  auto it = values_.find(e);
  return it == values_.end() ? 0 : it->second;
}

Rational MovingCut::size() const {
  std::uint64_t total = 0;
  for (const auto& [e, k] : values_) total += k;
  return Rational(total, h_);
}

bool MovingCut::pure() const {
  return std::all_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.second == h_; });
}

MovingCut MovingCut::pure_on(std::uint32_t h, std::span<const EdgeId> edges) {
  MovingCut c(h);
  for (EdgeId e : edges) c.set(e, h);
  return c;
}

namespace {

void check_cut(const Graph& g, const MovingCut& cut) {
  for (const auto& [e, k] : cut.support()) {
    if (e >= g.edge_count()) {
      throw InputError("cut references edge id " + std::to_string(e) + " but the graph has " +
                       std::to_string(g.edge_count()) + " edges");
    }
  }
}

}  // namespace

Graph apply_cut(const Graph& g, const MovingCut& cut, CutMode mode) {
  check_cut(g, cut);
  if (mode == CutMode::DeleteSupport) {
    if (!cut.pure()) throw InputError("DeleteSupport needs a pure cut");
    std::vector<Edge> edges;
    std::vector<Rational> lengths;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (cut.numerator(e) != 0) continue;
      edges.push_back(g.edge(e));
      if (!g.unit_lengths()) lengths.push_back(g.length(e));
    }
    if (g.unit_lengths()) return Graph(g.vertex_count(), std::move(edges), g.allows_self_loops());
    return Graph(g.vertex_count(), std::move(edges), std::move(lengths), g.allows_self_loops());
  }
  if (cut.support().empty()) return g;
  std::vector<Rational> lengths(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    // l(e) + h * (k / h) = l(e) + k
    lengths[e] = g.length(e) + cut.numerator(e);
  }
  return Graph(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
               std::move(lengths), g.allows_self_loops());
}

Demand::Demand(VertexId n) : out_(n), in_(n) {}

void Demand::add(VertexId from, VertexId to, const Rational& value) {
  if (from >= vertex_count() || to >= vertex_count()) {
    throw InputError("demand pair (" + std::to_string(from) + "," + std::to_string(to) +
                     ") outside the vertex set");
  }
  if (value < 0) throw InputError("negative demand value " + to_string(value));
  if (value == 0) return;
  entries_[{from, to}] += value;
  out_[from] += value;
  in_[to] += value;
}

Rational Demand::value(VertexId from, VertexId to) const {
  auto it = entries_.find({from, to});
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational Demand::load() const {
  Rational best(0);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    best = std::max(best, std::max(out_[v], in_[v]));
  }
  return best;
}

Rational Demand::size() const {
  Rational total(0);
  for (const auto& [pair, value] : entries_) total += value;
  return total;
}

bool Demand::is_unit(std::span<const std::int64_t> degrees) const {
  if (degrees.size() != vertex_count()) throw InputError("degree list does not match demand");
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (out_[v] > degrees[v] || in_[v] > degrees[v]) return false;
  }
  return true;
}

bool Demand::is_unit(const Graph& g) const {
  std::vector<std::int64_t> deg(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  return is_unit(deg);
}

bool Demand::is_h_length(const Graph& g, const Rational& h) const {
  std::optional<VertexId> source;
  DistanceResult ball;
  for (const auto& [pair, value] : entries_) {
    if (!source || *source != pair.first) {
      source = pair.first;
      ball = bounded_bfs(g, pair.first, h);
    }
    if (!ball.at(pair.second)) return false;
  }
  return true;
}

std::vector<Rational> Flow::edge_congestion(const Graph& g) const {
  std::vector<Rational> load(g.edge_count());
  for (const FlowPath& p : paths) {
    if (p.value <= 0) throw InputError("flow path with non-positive value");
    if (p.vertices.empty()) throw InputError("empty flow path");
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      g.check_vertex(p.vertices[i]);
      if (!seen.insert(p.vertices[i]).second) throw InputError("flow path is not simple");
      if (i == 0) continue;
      auto e = g.find_edge(p.vertices[i - 1], p.vertices[i]);
      if (!e) {
        throw InputError("flow path step " + std::to_string(p.vertices[i - 1]) + "-" +
                         std::to_string(p.vertices[i]) + " is not an edge");
      }
      load[*e] += p.value;
    }
  }
  return load;
}

Rational Flow::congestion(const Graph& g) const {
  Rational best(0);
  for (const auto& c : edge_congestion(g)) best = std::max(best, c);
  return best;
}

std::size_t Flow::dilation() const {
  std::size_t best = 0;
  for (const FlowPath& p : paths) best = std::max(best, p.hops());
  return best;
}

Demand Flow::routed_demand(VertexId n) const {
  Demand d(n);
  for (const FlowPath& p : paths) {
    if (p.vertices.empty()) continue;
    d.add(p.vertices.front(), p.vertices.back(), p.value);
  }
  return d;
}

double LcParams::phi() const {
  return 1.0 / (2.0 * t * std::pow(n, theta_decomposition / t) * std::log(n));
}

double LcParams::delta() const {
  const double p = phi();
  return 4.0 * theta_flow * t * std::log(n) / (p * p);
}

double LcParams::delta_prime() const { return phi() / (2.0 * t) * delta(); }

double LcParams::linkedness() const { return 1.0 / (100.0 * phi() * std::log(n)); }

double LcParams::cut_slack(double h, double s) const {
  return h * s * std::pow(n, theta_decomposition / s) * std::log(n);
}

Rational separated(const Graph& g, const MovingCut& cut, const Demand& demand, const Rational& h) {
  if (demand.vertex_count() != g.vertex_count()) {
    throw InputError("demand is defined on a different vertex set");
  }
  const Graph cut_graph = apply_cut(g, cut);
  Rational total(0);
  std::optional<VertexId> source;
  DistanceResult ball;
  for (const auto& [pair, value] : demand.entries()) {
    if (!source || *source != pair.first) {
      source = pair.first;
      ball = bounded_bfs(cut_graph, pair.first, h);
    }
    if (!ball.at(pair.second)) total += value;
  }
  return total;
}

std::optional<Rational> sparsity_wrt_demand(const Graph& g, const MovingCut& cut,
                                            const Demand& demand, const Rational& h) {
  const Rational sep = separated(g, cut, demand, h);
  if (sep == 0) return std::nullopt;
  return cut.size() / sep;
}

CutSparsity cut_sparsity(const Graph& g, const MovingCut& cut, std::uint32_t h, std::uint32_t s) {
  if (h == 0 || s == 0) throw InputError("cut_sparsity needs h, s >= 1");
  if (cut.h() != h * s) {
    throw InputError("cut must be an hs-length cut: cut.h() = " + std::to_string(cut.h()) +
                     ", h*s = " + std::to_string(h * s));
  }
  // A pure hs-length cut lengthens each support edge by hs, so no path through
  // it stays within hs; deleting the support is equivalent and keeps BFS fast.
  const Graph cut_graph = apply_cut(g, cut, cut.pure() ? CutMode::DeleteSupport : CutMode::Lengthen);
  const VertexId n = g.vertex_count();
  const Rational near(h);
  const Rational far(h * s);
  std::vector<Demand::Pair> pairs;
  for (VertexId u = 0; u < n; ++u) {
    const auto ball = bounded_bfs(g, u, near);
    const auto cut_ball = bounded_bfs(cut_graph, u, far);
    for (const auto& [v, d] : ball.distances) {
      if (v != u && !cut_ball.at(v)) pairs.emplace_back(u, v);
    }
  }
  CutSparsity out{std::nullopt, Rational(0), Demand(n)};
  if (pairs.empty()) return out;
  // 0 source, 1 sink, 2+u senders, 2+n+v receivers.
  MaxFlow flow(2 + 2 * static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    flow.add_arc(0, 2 + v, g.degree(v));
    flow.add_arc(2 + n + v, 1, g.degree(v));
  }
  std::vector<std::size_t> arcs;
  for (const auto& [u, v] : pairs) arcs.push_back(flow.add_arc(2 + u, 2 + n + v, MaxFlow::kInfinite));
  out.max_separated = Rational(flow.run(0, 1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (auto f = flow.flow_on(arcs[i]); f > 0) out.witness.add(pairs[i].first, pairs[i].second, f);
  }
  if (out.max_separated > 0) out.sparsity = cut.size() / out.max_separated;
  return out;
}

std::vector<std::int64_t> self_loop_degrees(const Graph& g, const MovingCut& cut, std::int64_t l) {
  check_cut(g, cut);
  if (l < 0) throw InputError("linkedness must be non-negative");
  std::vector<Rational> per_vertex(g.vertex_count());
  for (const auto& [e, k] : cut.support()) {
    const Edge& ed = g.edge(e);
    per_vertex[ed.u] += cut.value(e);
    if (ed.v != ed.u) per_vertex[ed.v] += cut.value(e);
  }
  std::vector<std::int64_t> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out[v] = ceil(per_vertex[v] * l).convert_to<std::int64_t>();
  }
  return out;
}

std::vector<std::int64_t> LoopAugmented::degrees() const {
  std::vector<std::int64_t> out(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out[v] = degree(v);
  return out;
}

LoopAugmented with_self_loops(const Graph& g, const MovingCut& cut, std::int64_t l) {
  return {g, self_loop_degrees(g, cut, l)};
}

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

/// round(n^(-d / radius) * 2^64) as an integer.
BigInt grid_power(std::uint64_t n, const Rational& d, const Rational& radius) {
  if (d == 0) return BigInt(1) << 64;
  const Rational exponent = d / radius;
  const Float x = Float(boost::multiprecision::numerator(exponent)) /
                  Float(boost::multiprecision::denominator(exponent));
  const Float scaled = boost::multiprecision::pow(Float(n), -x) * boost::multiprecision::ldexp(Float(1), 64);
  return boost::multiprecision::round(scaled).convert_to<BigInt>();
}

}  // namespace

ExponentialDemand exponential_demand(const Graph& g, std::uint32_t h, std::uint32_t s) {
  if (g.edge_count() == 0) throw InputError("exponential demand needs at least one edge");
  if (static_cast<std::uint64_t>(s) * h < 2) throw InputError("exponential demand needs s*h >= 2");
  const std::size_t m = g.edge_count();
  const VertexId n = g.vertex_count();
  ExponentialDemand out;
  out.radius = Rational(static_cast<std::uint64_t>(s) * h, 2);
  std::vector<DistanceResult> balls;
  balls.reserve(n);
  for (VertexId v = 0; v < n; ++v) balls.push_back(bounded_bfs(g, v, out.radius));

  out.edge_distance.assign(m, std::vector<std::optional<Rational>>(m));
  out.edge_demand.assign(m, std::vector<Rational>(m));
  for (EdgeId a = 0; a < m; ++a) {
    const Edge& ea = g.edge(a);
    std::vector<BigInt> weight(m);
    BigInt row(0);
    for (EdgeId b = 0; b < m; ++b) {
      std::optional<Rational> d;
      if (a == b) {
        d = Rational(0);
      } else {
        const Edge& eb = g.edge(b);
        std::optional<Rational> gap;
        for (VertexId x : {ea.u, ea.v}) {
          for (VertexId y : {eb.u, eb.v}) {
            if (auto dxy = balls[x].at(y); dxy && (!gap || *dxy < *gap)) gap = dxy;
          }
        }
        if (gap) {
          Rational total = g.length(a) / 2 + *gap + g.length(b) / 2;
          if (total <= out.radius) d = total;
        }
      }
      out.edge_distance[a][b] = d;
      if (d) {
        weight[b] = grid_power(n, *d, out.radius);
        row += weight[b];
      }
    }
    for (EdgeId b = 0; b < m; ++b) {
      if (weight[b] != 0) out.edge_demand[a][b] = Rational(weight[b], row);
    }
  }

  out.vertex_demand = Demand(n);
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = 0; b < m; ++b) {
      const Rational& value = out.edge_demand[a][b];
      if (value == 0) continue;
      const Rational quarter = value / 4;
      for (VertexId x : {g.edge(a).u, g.edge(a).v}) {
        for (VertexId y : {g.edge(b).u, g.edge(b).v}) out.vertex_demand.add(x, y, quarter);
      }
    }
  }
  return out;
}

SparseCutSearch sparsest_pure_cut(const Graph& g, std::uint32_t h, std::uint32_t s,
                                  std::size_t max_support) {
  const std::size_t m = g.edge_count();
  if (m > 20) throw ResourceError("pure cut search is limited to m <= 20");
  SparseCutSearch out;
  std::vector<EdgeId> chosen;
  const std::size_t top = std::min(max_support, m);
  for (std::size_t size = 1; size <= top; ++size) {
    std::vector<EdgeId> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<EdgeId>(i);
    while (true) {
      MovingCut cut = MovingCut::pure_on(h * s, idx);
      ++out.cuts_examined;
      auto result = cut_sparsity(g, cut, h, s);
      if (result.sparsity && (!out.best_sparsity || *result.sparsity < *out.best_sparsity)) {
        out.best_sparsity = result.sparsity;
        out.best = cut;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

void write_cut(std::ostream& out, const Graph& g, const MovingCut& cut) {
  check_cut(g, cut);
  for (const auto& [e, k] : cut.support()) {
    out << "c " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << k << '/' << cut.h() << '\n';
  }
}

namespace {

template <typename F>
void for_each_record(std::istream& in, char tag, F&& f) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head.size() != 1 || head[0] != tag) {
      throw ParseError(line, "expected a '" + std::string(1, tag) + "' line, got '" + head + "'");
    }
    try {
      f(ls, line);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line, e.what());
    }
  }
}

VertexId read_vertex(std::istream& ls, std::size_t line) {
  long long v = -1;
  if (!(ls >> v) || v < 0) throw ParseError(line, "expected a vertex id");
  return static_cast<VertexId>(v);
}

}  // namespace

MovingCut read_cut(std::istream& in, const Graph& g) {
  std::optional<MovingCut> cut;
  std::vector<std::pair<EdgeId, std::uint32_t>> values;
  for_each_record(in, 'c', [&](std::istream& ls, std::size_t line) {
    VertexId u = read_vertex(ls, line);
    VertexId v = read_vertex(ls, line);
    std::string frac;
    if (!(ls >> frac)) throw ParseError(line, "expected <numerator>/<h>");
    auto slash = frac.find('/');
    if (slash == std::string::npos) throw ParseError(line, "expected <numerator>/<h>");
    const auto k = std::stoul(frac.substr(0, slash));
    const auto h = std::stoul(frac.substr(slash + 1));
    if (!cut) cut.emplace(static_cast<std::uint32_t>(h));
    if (cut->h() != h) throw ParseError(line, "inconsistent h across cut lines");
    auto e = g.find_edge(u, v);
    if (!e) throw ParseError(line, "cut edge is not in the graph");
    cut->set(*e, static_cast<std::uint32_t>(k));
  });
  return cut.value_or(MovingCut(1));
}

void write_demand(std::ostream& out, const Demand& d) {
  for (const auto& [pair, value] : d.entries()) {
    out << "d " << pair.first << ' ' << pair.second << ' ' << to_string(value) << '\n';
  }
}

Demand read_demand(std::istream& in, VertexId n) {
  Demand d(n);
  for_each_record(in, 'd', [&](std::istream& ls, std::size_t line) {
    VertexId u = read_vertex(ls, line);
    VertexId v = read_vertex(ls, line);
    std::string value;
    if (!(ls >> value)) throw ParseError(line, "expected a demand value");
    d.add(u, v, parse_rational(value));
  });
  return d;
}

void write_flow(std::ostream& out, const Flow& f) {
  for (const FlowPath& p : f.paths) {
    out << "f " << to_string(p.value) << " :";
    for (VertexId v : p.vertices) out << ' ' << v;
    out << '\n';
  }
}

Flow read_flow(std::istream& in) {
  Flow f;
  for_each_record(in, 'f', [&](std::istream& ls, std::size_t line) {
    std::string value;
    std::string colon;
    if (!(ls >> value >> colon) || colon != ":") throw ParseError(line, "expected 'f <value> : ...'");
    FlowPath p;
    p.value = parse_rational(value);
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw ParseError(line, "negative vertex id");
      p.vertices.push_back(static_cast<VertexId>(v));
    }
    if (p.vertices.empty()) throw ParseError(line, "flow path without vertices");
    f.paths.push_back(std::move(p));
  });
  return f;
}

}  // namespace pgspan
