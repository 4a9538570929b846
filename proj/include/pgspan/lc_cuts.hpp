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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pgspan/graph.hpp"
#include "pgspan/rational.hpp"

namespace pgspan {

/// h-length moving cut: each edge carries k/h with k in 0..h. Zero entries are
/// not stored.
class MovingCut {
 public:
  explicit MovingCut(std::uint32_t h = 1);

  std::uint32_t h() const { return h_; }
  void set(EdgeId e, std::uint32_t numerator);
  std::uint32_t numerator(EdgeId e) const;
  Rational value(EdgeId e) const { return Rational(numerator(e), h_); }
  const std::map<EdgeId, std::uint32_t>& support() const { return values_; }

  /// |C| = sum of values.
  Rational size() const;
  /// Every value is 0 or 1.
  bool pure() const;

  /// Pure cut deleting `edges`.
  static MovingCut pure_on(std::uint32_t h, std::span<const EdgeId> edges);

 private:
  std::uint32_t h_;
  std::map<EdgeId, std::uint32_t> values_;
};

enum class CutMode {
  Lengthen,       ///< l(e) + h * C(e)
  DeleteSupport,  ///< pure cuts only: drop every edge with C(e) = 1
};

/// G - C. Throws InputError for edge ids outside g or DeleteSupport on an
/// impure cut.
Graph apply_cut(const Graph& g, const MovingCut& cut, CutMode mode = CutMode::Lengthen);

/// Non-negative demand on ordered vertex pairs with cached per-vertex loads.
class Demand {
 public:
  using Pair = std::pair<VertexId, VertexId>;

  explicit Demand(VertexId n = 0);

  VertexId vertex_count() const { return static_cast<VertexId>(out_.size()); }
  void add(VertexId from, VertexId to, const Rational& value);
  Rational value(VertexId from, VertexId to) const;
  const std::map<Pair, Rational>& entries() const { return entries_; }

  const Rational& out_load(VertexId v) const { return out_[v]; }
  const Rational& in_load(VertexId v) const { return in_[v]; }
  /// max over v of max(in(v), out(v)).
  Rational load() const;
  /// |D|, the total demand.
  Rational size() const;

  /// max(in(v), out(v)) <= degree[v] for every v.
  bool is_unit(std::span<const std::int64_t> degrees) const;
  bool is_unit(const Graph& g) const;
  /// Positive only on pairs within distance h in g.
  bool is_h_length(const Graph& g, const Rational& h) const;

 private:
  std::map<Pair, Rational> entries_;
  std::vector<Rational> out_;
  std::vector<Rational> in_;
};

struct FlowPath {
  std::vector<VertexId> vertices;
  Rational value;

  std::size_t hops() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Path-based multicommodity flow.
struct Flow {
  std::vector<FlowPath> paths;

  /// congestion(e) per edge id of g. Throws InputError when a path is not a
  /// simple path of g or carries a non-positive value.
  std::vector<Rational> edge_congestion(const Graph& g) const;
  Rational congestion(const Graph& g) const;
  /// Largest hop count of a flow-path.
  std::size_t dilation() const;
  /// D_F: value routed between each ordered pair of path endpoints.
  Demand routed_demand(VertexId n) const;
};

/// Parameters of the routable high-degree subgraph construction. The constants
/// are inputs; logs are natural.
struct LcParams {
  int t = 2;
  double n = 2;
  double theta_decomposition = 1.0;
  double theta_flow = 1.0;

  /// 1 / (2 t n^(theta_decomposition / t) log n)
  double phi() const;
  /// 4 theta_flow t log n / phi^2
  double delta() const;
  /// phi / (2t) * delta
  double delta_prime() const;
  /// 1 / (100 phi log n)
  double linkedness() const;
  /// h s n^(theta_decomposition / s) log n
  double cut_slack(double h, double s) const;
};

/// sum of D(u,v) over pairs with d_{g-C}(u,v) > h.
Rational separated(const Graph& g, const MovingCut& cut, const Demand& demand, const Rational& h);

/// |C| / sep_h(C, D); nullopt when nothing is separated.
std::optional<Rational> sparsity_wrt_demand(const Graph& g, const MovingCut& cut,
                                            const Demand& demand, const Rational& h);

struct CutSparsity {
  /// nullopt means +infinity: no h-length pair is hs-separated.
  std::optional<Rational> sparsity;
  /// max over unit h-length D of sep_{hs}(C, D).
  Rational max_separated;
  /// A maximizing integral demand.
  Demand witness;
};

/// (h,s)-length sparsity of an hs-length cut (cut.h() must equal h*s). The
/// inner maximum is a degree-capacitated transportation problem over the
/// separated pairs, solved exactly by max-flow.
CutSparsity cut_sparsity(const Graph& g, const MovingCut& cut, std::uint32_t h, std::uint32_t s);

/// ceil(C(v) * l) per vertex, where C(v) sums the cut over v's edges.
std::vector<std::int64_t> self_loop_degrees(const Graph& g, const MovingCut& cut, std::int64_t l);

/// G + L^l_C: the base graph plus per-vertex self-loop counts. Each loop adds
/// one to the vertex's degree.
struct LoopAugmented {
  Graph graph;
  std::vector<std::int64_t> loops;

  std::int64_t degree(VertexId v) const { return graph.degree(v) + loops[v]; }
  std::vector<std::int64_t> degrees() const;
};

LoopAugmented with_self_loops(const Graph& g, const MovingCut& cut, std::int64_t l);

/// Exponential demand over edges and its lift onto vertex pairs.
struct ExponentialDemand {
  Rational radius;  // s h / 2
  /// edge_distance[e][e'] or nullopt beyond the radius.
  std::vector<std::vector<std::optional<Rational>>> edge_distance;
  /// D(e, e') = w(e, e') / w(e); every row sums to exactly 1.
  std::vector<std::vector<Rational>> edge_demand;
  /// D(v, v') = sum over e at v, e' at v' of D(e, e') / 4.
  Demand vertex_demand;
};

/// w(e,e') = n^(-d(e,e') / (s h / 2)) for d(e,e') <= s h / 2, else 0, with
/// d(e,e) = 0 and d(e,e') = l(e)/2 + min endpoint distance + l(e')/2.
/// The powers are rounded to a common 2^-64 grid; normalization is exact.
ExponentialDemand exponential_demand(const Graph& g, std::uint32_t h, std::uint32_t s);

struct SparseCutSearch {
  std::optional<MovingCut> best;
  std::optional<Rational> best_sparsity;
  std::size_t cuts_examined = 0;
};

/// Exhaustive search over pure hs-length cuts with support size 1..max_support.
/// Micro-instances only (m <= 20).
SparseCutSearch sparsest_pure_cut(const Graph& g, std::uint32_t h, std::uint32_t s,
                                  std::size_t max_support = 6);

// Text forms:
//   c <u> <v> <numerator>/<h>
//   d <u> <v> <value>
//   f <value> : v0 v1 ... vk

void write_cut(std::ostream& out, const Graph& g, const MovingCut& cut);
MovingCut read_cut(std::istream& in, const Graph& g);
void write_demand(std::ostream& out, const Demand& d);
Demand read_demand(std::istream& in, VertexId n);
void write_flow(std::ostream& out, const Flow& f);
Flow read_flow(std::istream& in);

}  // namespace pgspan
