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
#include <optional>
#include <string>
#include <vector>

#include "pgspan/generators.hpp"
#include "pgspan/graph.hpp"
#include "pgspan/greedy.hpp"
#include "pgspan/pg_analysis.hpp"
#include "pgspan/report.hpp"

namespace pgspan {

struct AnalysisToggles {
  bool girth = true;
  ArboricityBudget arboricity;
};

/// Strategy names accepted by run_build: "greedy", "lex", "single" run
/// parallel_greedy; "scripted-fig2", "dimensions" and "scripted" (with
/// explicit rounds) run scripted_parallel_greedy. Sequential builds ignore it.
struct BuildRequest {
  int t = 3;
  std::string algorithm = "par";
  std::string strategy = "greedy";
  std::uint64_t seed = 0;
  EdgeOrder edge_order = EdgeOrder::Input;
  std::vector<std::vector<Edge>> script;  // for "scripted"
};

struct BuildOutcome {
  SpannerResult result;
  StretchReport stretch;
  std::optional<PgViolation> certificate_violation;
  SpannerReport report;

  bool ok() const { return stretch.valid() && !certificate_violation; }
};

/// The two rounds {0-1, 2-3} then {1-2, 0-3} on C4. Throws InputError unless
/// g is the 4-cycle 0-1-2-3-0.
std::vector<std::vector<Edge>> c4_script(const Graph& g);
/// Dimension matchings of Q_d. Throws InputError unless g is Q_d for some d.
std::vector<std::vector<Edge>> dimension_script(const Graph& g);

/// Runs the construction, verifies stretch and certificate, and fills the
/// report. Never throws on verification failure; see BuildOutcome::ok.
BuildOutcome run_build(const Graph& g, const BuildRequest& request,
                       const AnalysisToggles& analysis = {});

/// Key=value plan file; see README for the keys.
struct SweepPlan {
  std::vector<std::string> generators;
  std::vector<int> t_values;
  std::vector<std::string> algorithms{"par"};
  std::vector<std::string> strategies{"greedy"};
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path out;
  std::optional<std::filesystem::path> svg;
  AnalysisToggles analysis;
  int threads = 0;  // 0 keeps the OpenMP default

  /// Throws InputError when the cross product is empty or a value is invalid.
  void validate() const;
};

SweepPlan parse_plan(std::istream& in);
SweepPlan parse_plan(const std::filesystem::path& path);

struct SweepInstance {
  std::string generator;
  int t = 0;
  std::string algorithm;
  std::string strategy;
  std::uint64_t seed = 0;
};

/// Cross product in generator, t, algorithm, strategy, seed order. Sequential
/// builds appear once per seed with strategy "-".
std::vector<SweepInstance> expand(const SweepPlan& plan);

/// Runs every instance on a worker pool and writes the header plus one row
/// per instance to `csv` in instance order, flushing after each row. Throws
/// InternalError if a build fails verification.
std::vector<SpannerReport> run_sweep(const SweepPlan& plan, std::ostream& csv);
/// Writes plan.out (and plan.svg when set).
std::vector<SpannerReport> run_sweep(const SweepPlan& plan);

/// Log-log scatter of m_spanner against n, one series per t.
void write_svg(std::ostream& out, const std::vector<SpannerReport>& rows);

}  // namespace pgspan
