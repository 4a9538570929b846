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

#include "pgspan/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "pgspan/errors.hpp"

namespace pgspan {

std::vector<std::vector<VertexId>> enumerate_paths(const Graph& g, VertexId u, VertexId v,
                                                   std::uint32_t max_hops, std::size_t limit) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.unit_lengths()) throw InputError("path enumeration needs unit edge lengths");
  std::vector<std::vector<VertexId>> out;
  if (u == v) {
    out.push_back({u});
    return out;
  }
  // Hop distance to v prunes branches that cannot finish within budget.
  const auto to_target = bounded_bfs(g, v, Rational(max_hops));
  std::vector<std::uint32_t> remaining(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  for (const auto& [x, d] : to_target.distances) remaining[x] = d.convert_to<std::uint32_t>();
  if (remaining[u] > max_hops) return out;

  std::vector<VertexId> path{u};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[u] = 1;
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    const VertexId x = path.back();
    auto nbrs = g.neighbors(x);
    std::size_t& i = cursor.back();
    if (i == nbrs.size()) {
      on_path[x] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const VertexId y = nbrs[i++];
    const std::size_t hops = path.size();  // after stepping to y
    if (on_path[y] || remaining[y] > max_hops - hops) continue;
    if (y == v) {
      path.push_back(y);
      out.push_back(path);
      path.pop_back();
      if (out.size() > limit) {
        throw ResourceError("more than " + std::to_string(limit) + " paths of at most " +
                            std::to_string(max_hops) + " hops between " + std::to_string(u) +
                            " and " + std::to_string(v));
      }
      continue;
    }
    path.push_back(y);
    on_path[y] = 1;
    cursor.push_back(0);
  }
  return out;
}

namespace {

using Real = long double;

struct Commodity {
  VertexId from = 0;
  VertexId to = 0;
  Rational demand;
  Real scaled = 0;
  std::vector<std::vector<VertexId>> vertex_paths;
  std::vector<std::vector<std::uint32_t>> edge_paths;  // compact edge indices
};

Real path_length(const std::vector<std::uint32_t>& p, const std::vector<Real>& len) {
  Real total = 0;
  for (auto e : p) total += len[e];
  return total;
}

std::size_t shortest(const Commodity& c, const std::vector<Real>& len) {
  std::size_t best = 0;
  Real best_len = std::numeric_limits<Real>::infinity();
  for (std::size_t p = 0; p < c.edge_paths.size(); ++p) {
    const Real l = path_length(c.edge_paths[p], len);
    if (l < best_len) {
      best_len = l;
      best = p;
    }
  }
  return best;
}

/// Rounds per-path weights onto a 2^-32 grid and rescales each commodity to
/// carry exactly its demand.
Flow exact_flow(const std::vector<Commodity>& cs, const std::vector<std::vector<Real>>& share) {
  Flow flow;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Real total = 0;
    for (Real x : share[k]) total += x;
    std::vector<std::uint64_t> w(share[k].size());
    std::uint64_t sum = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      w[p] = static_cast<std::uint64_t>(std::llround(share[k][p] / total * 4294967296.0L));
      sum += w[p];
    }
    if (sum == 0) throw InternalError("commodity lost all its flow during rounding");
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == 0) continue;
      flow.paths.push_back({cs[k].vertex_paths[p], cs[k].demand * Rational(w[p], sum)});
    }
  }
  return flow;
}

}  // namespace

RoutingResult route_demand(const Graph& g, const Demand& demand, std::uint32_t max_hops,
                           const Rational& cap, const RoutingOptions& options) {
  if (demand.vertex_count() != g.vertex_count()) {
    throw InputError("demand is defined on a different vertex set");
  }
  if (!g.unit_lengths()) throw InputError("routing needs unit edge lengths");
  if (cap < 0) throw InputError("congestion cap must be non-negative");
  if (!(options.epsilon > 0 && options.epsilon < 1)) throw InputError("epsilon must lie in (0,1)");

  RoutingResult result;
  std::vector<Commodity> cs;
  for (const auto& [pair, value] : demand.entries()) {
    cs.push_back({pair.first, pair.second, value, 0, {}, {}});
  }
  if (cs.empty()) {
    result.feasible = true;
    result.flow = Flow{};
    result.congestion = Rational(0);
    return result;
  }

  // Enumerate paths; map edges to a compact index over edges that some path uses.
  std::vector<std::int64_t> compact(g.edge_count(), -1);
  std::uint32_t m = 0;
  for (Commodity& c : cs) {
    c.vertex_paths = enumerate_paths(g, c.from, c.to, max_hops, options.max_paths_per_pair);
    result.paths += c.vertex_paths.size();
    if (c.vertex_paths.empty()) {
      result.lower_bound = std::numeric_limits<double>::infinity();
      result.upper_bound = std::numeric_limits<double>::infinity();
      return result;
    }
    for (const auto& vp : c.vertex_paths) {
      std::vector<std::uint32_t> ep;
      for (std::size_t i = 1; i < vp.size(); ++i) {
        const EdgeId e = *g.find_edge(vp[i - 1], vp[i]);
        if (compact[e] < 0) compact[e] = m++;
        ep.push_back(static_cast<std::uint32_t>(compact[e]));
      }
      c.edge_paths.push_back(std::move(ep));
    }
  }

  const double cap_d = to_double(cap);
  Rational best_exact;
  std::optional<Flow> best_flow;
  // Returns true once a candidate meets the cap exactly.
  auto try_candidate = [&](const std::vector<std::vector<Real>>& share) {
    Flow f = exact_flow(cs, share);
    Rational c = f.congestion(g);
    if (!best_flow || c < best_exact) {
      best_exact = c;
      best_flow = f;
    }
    return c <= cap;
  };
  auto finish = [&](bool feasible) {
    result.congestion = best_exact;
    if (feasible) {
      if (best_flow->dilation() > max_hops) throw InternalError("routed flow exceeds the hop budget");
      if (best_flow->routed_demand(g.vertex_count()).entries() != demand.entries()) {
        throw InternalError("routed flow does not match the demand");
      }
      result.feasible = true;
      result.flow = std::move(best_flow);
    }
    return result;
  };

  // Commodities without edges (u == v) never load anything.
  std::vector<std::vector<Real>> share(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) share[k].assign(cs[k].edge_paths.size(), 0);

  // Phase 0: every commodity on a fewest-hop path.
  std::vector<Real> load(m, 0);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < cs[k].edge_paths.size(); ++p) {
      if (cs[k].edge_paths[p].size() < cs[k].edge_paths[best].size()) best = p;
    }
    share[k][best] = 1;
    for (auto e : cs[k].edge_paths[best]) load[e] += static_cast<Real>(to_double(cs[k].demand));
  }
  const Real kappa0 = m == 0 ? 0 : *std::max_element(load.begin(), load.end());
  result.upper_bound = static_cast<double>(kappa0);
  if (try_candidate(share) || m == 0) return finish(true);

  // Max concurrent flow by multiplicative length updates on unit capacities,
  // with demands prescaled so the phase-0 routing has congestion 1.
  const Real eps = options.epsilon / 4;
  for (Commodity& c : cs) c.scaled = static_cast<Real>(to_double(c.demand)) / kappa0;
  std::vector<Real> len(m, std::exp(-std::log(static_cast<Real>(m) / (1 - eps)) / eps));
  Real volume = len[0] * m;
  std::vector<std::vector<Real>> flow(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) flow[k].assign(cs[k].edge_paths.size(), 0);
  std::fill(load.begin(), load.end(), 0);

  const double budget = std::ceil(options.iteration_constant *
                                  std::log(1.0 + static_cast<double>(result.paths)) /
                                  (options.epsilon * options.epsilon));
  double best_ub = static_cast<double>(kappa0);
  for (std::size_t phase = 1; phase <= static_cast<std::size_t>(budget); ++phase) {
    bool complete = true;
    for (std::size_t k = 0; k < cs.size() && complete; ++k) {
      Real rem = cs[k].scaled;
      while (rem > 0) {
        if (volume >= 1) {
          complete = false;
          break;
        }
        const std::size_t p = shortest(cs[k], len);
        const Real amount = std::min<Real>(rem, 1);
        flow[k][p] += amount;
        rem -= amount;
        for (auto e : cs[k].edge_paths[p]) {
          load[e] += amount;
          volume -= len[e];
          len[e] *= 1 + eps * amount;
          volume += len[e];
        }
      }
    }
    if (!complete) break;
    result.phases = phase;

    // Dual bound: sum_k d_k dist(k) / sum_e len(e).
    Real dual = 0;
    for (const Commodity& c : cs) {
      dual += static_cast<Real>(to_double(c.demand)) * path_length(c.edge_paths[shortest(c, len)], len);
    }
    result.lower_bound = std::max(result.lower_bound, static_cast<double>(dual / volume));

    const Real peak = *std::max_element(load.begin(), load.end());
    const double ub = static_cast<double>(peak * kappa0 / static_cast<Real>(phase));
    if (ub < best_ub) {
      best_ub = ub;
      result.upper_bound = ub;
      if (ub <= cap_d * (1 + 1e-9) && try_candidate(flow)) return finish(true);
    }
    if (result.lower_bound > cap_d * (1 + 1e-9)) break;
    if (result.upper_bound <= (1 + options.epsilon / 2) * result.lower_bound) break;
  }
  return finish(false);
}

Demand matching_demand(const Graph& g, std::span<const Edge> matching, const Rational& delta) {
  if (delta <= 0) throw InputError("matching value must be positive");
  Demand d(g.vertex_count());
  std::set<VertexId> used;
  for (const Edge& e : matching) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " is not in the graph");
    }
    if (!used.insert(e.u).second || !used.insert(e.v).second) {
      throw InputError("edges " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " and an earlier edge share a vertex");
    }
    d.add(e.u, e.v, delta);
  }
  return d;
}

RoutingResult route_matching(const Graph& g, std::span<const Edge> matching, const Rational& delta,
                             std::uint32_t t, const Rational& cap, const RoutingOptions& options) {
  return route_demand(g, matching_demand(g, matching, delta), t, cap, options);
}

ContradictionProbe pg_contradiction_probe(const Graph& h_graph, const PgSequence& seq,
                                          std::uint32_t t, const Rational& delta_prime,
                                          const RoutingOptions& options) {
  const std::vector<Edge>* last = nullptr;
  for (const auto& round : seq.rounds) {
    if (!round.empty()) last = &round;
  }
  if (last == nullptr) throw InputError("sequence has no non-empty round");
  ContradictionProbe probe;
  probe.routing = route_matching(h_graph, *last, delta_prime, t, delta_prime / 2, options);
  if (!probe.routing.feasible) return probe;
  const std::set<Edge> round(last->begin(), last->end());
  for (const FlowPath& p : probe.routing.flow->paths) {
    bool avoids = true;
    for (std::size_t i = 1; i < p.vertices.size() && avoids; ++i) {
      avoids = !round.contains(Edge(p.vertices[i - 1], p.vertices[i]));
    }
    if (avoids) {
      probe.witness = p;
      return probe;
    }
  }
  // Edges of the round carry at most half the demand, so the rest must use
  // round-free paths.
  throw InternalError("feasible routing of the last round has no round-free path");
}

}  // namespace pgspan
