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

#include "pgspan/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <omp.h>

#include "pgspan/errors.hpp"

namespace pgspan {

std::vector<std::vector<Edge>> c4_script(const Graph& g) {
  const bool is_c4 = g.vertex_count() == 4 && g.edge_count() == 4 && g.has_edge(0, 1) &&
                     g.has_edge(1, 2) && g.has_edge(2, 3) && g.has_edge(0, 3);
  if (!is_c4) throw InputError("strategy scripted-fig2 needs the 4-cycle 0-1-2-3-0");
  return {{Edge(0, 1), Edge(2, 3)}, {Edge(1, 2), Edge(0, 3)}};
}

std::vector<std::vector<Edge>> dimension_script(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n < 2 || !std::has_single_bit(n)) {
    throw InputError("strategy dimensions needs a hypercube graph");
  }
  const auto d = static_cast<std::uint32_t>(std::countr_zero(n));
  auto rounds = hypercube_dimension_matchings(d);
  std::size_t total = 0;
  for (const auto& round : rounds) {
    for (const Edge& e : round) {
      if (!g.has_edge(e.u, e.v)) throw InputError("strategy dimensions needs a hypercube graph");
    }
    total += round.size();
  }
  if (total != g.edge_count()) throw InputError("strategy dimensions needs a hypercube graph");
  return rounds;
}

BuildOutcome run_build(const Graph& g, const BuildRequest& request,
                       const AnalysisToggles& analysis) {
  if (request.algorithm != "seq" && request.algorithm != "par") {
    throw InputError("unknown algorithm '" + request.algorithm + "' (expected seq or par)");
  }
  BuildOutcome out;
  const auto start = std::chrono::steady_clock::now();
  GreedyConfig cfg;
  cfg.t = request.t;
  cfg.seed = request.seed;
  cfg.edge_order = request.edge_order;
  std::string strategy = request.strategy;
  if (request.algorithm == "seq") {
    strategy = "-";
    out.result = sequential_greedy(g, cfg);
  } else if (strategy == "scripted-fig2") {
    out.result = scripted_parallel_greedy(g, request.t, c4_script(g));
  } else if (strategy == "dimensions") {
    out.result = scripted_parallel_greedy(g, request.t, dimension_script(g));
  } else if (strategy == "scripted") {
    out.result = scripted_parallel_greedy(g, request.t, request.script);
  } else {
    cfg.strategy = parse_strategy(strategy);
    out.result = parallel_greedy(g, cfg);
  }
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const Graph& h = out.result.spanner;
  out.stretch = verify_spanner(g, h, request.t);
  out.certificate_violation = verify_pg_sequence(g.vertex_count(), out.result.certificate, request.t);

  SpannerReport& r = out.report;
  r.n = g.vertex_count();
  r.m_input = g.edge_count();
  r.t = request.t;
  r.algorithm = request.algorithm;
  r.strategy = strategy;
  r.seed = request.seed;
  r.m_spanner = h.edge_count();
  r.rounds = out.result.certificate.rounds.size();
  r.girth_computed = analysis.girth;
  if (analysis.girth) r.girth = girth(h);
  r.degeneracy = degeneracy(h).k;
  r.arboricity = arboricity_exact(h, analysis.arboricity);
  r.max_stretch = out.stretch.max_stretch_string();
  r.millis = millis;
  return out;
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const std::string& key) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !in.eof()) {
    throw ParseError(line, "bad value '" + text + "' for " + key);
  }
  return value;
}

bool parse_switch(const std::string& text, std::size_t line, const std::string& key) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw ParseError(line, "expected on/off for " + key + ", got '" + text + "'");
}

}  // namespace

void SweepPlan::validate() const {
  if (generators.empty()) throw InputError("plan has no generators");
  if (t_values.empty()) throw InputError("plan has no t values");
  if (algorithms.empty()) throw InputError("plan has no algorithms");
  if (seeds.empty()) throw InputError("plan has no seeds");
  if (strategies.empty()) throw InputError("plan has no strategies");
  for (int t : t_values) {
    if (t < 2) throw InputError("plan t value " + std::to_string(t) + " is below 2");
  }
  for (const auto& a : algorithms) {
    if (a != "seq" && a != "par") throw InputError("unknown algorithm '" + a + "' in plan");
  }
  for (const auto& s : strategies) {
    if (s != "greedy" && s != "lex" && s != "single") {
      throw InputError("sweep strategy must be greedy, lex or single, got '" + s + "'");
    }
  }
  for (const auto& gen : generators) parse_generator_spec(gen);
  if (threads < 0) throw InputError("threads must be non-negative");
}

SweepPlan parse_plan(std::istream& in) {
  SweepPlan plan;
  std::string raw;
  std::size_t line = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (!seen.insert(key).second) throw ParseError(line, "duplicate key '" + key + "'");
    try {
      if (key == "gens") {
        plan.generators = split_list(value);
      } else if (key == "t") {
        plan.t_values.clear();
        for (const auto& s : split_list(value)) plan.t_values.push_back(parse_number<int>(s, line, key));
      } else if (key == "algo") {
        plan.algorithms = split_list(value);
      } else if (key == "strategies") {
        plan.strategies = split_list(value);
      } else if (key == "seeds") {
        plan.seeds.clear();
        for (const auto& s : split_list(value)) {
          plan.seeds.push_back(parse_number<std::uint64_t>(s, line, key));
        }
      } else if (key == "out") {
        plan.out = value;
      } else if (key == "svg") {
        plan.svg = value;
      } else if (key == "girth") {
        plan.analysis.girth = parse_switch(value, line, key);
      } else if (key == "arboricity_budget") {
        plan.analysis.arboricity.max_vertices = parse_number<VertexId>(value, line, key);
      } else if (key == "threads") {
        plan.threads = parse_number<int>(value, line, key);
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line, e.what());
    }
  }
  plan.validate();
  return plan;
}

SweepPlan parse_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open plan " + path.string());
  return parse_plan(in);
}

std::vector<SweepInstance> expand(const SweepPlan& plan) {
  std::vector<SweepInstance> out;
  for (const auto& gen : plan.generators) {
    for (int t : plan.t_values) {
      for (const auto& algo : plan.algorithms) {
        const std::vector<std::string> seq_only{"-"};
        const auto& strategies = algo == "seq" ? seq_only : plan.strategies;
        for (const auto& strategy : strategies) {
          for (std::uint64_t seed : plan.seeds) out.push_back({gen, t, algo, strategy, seed});
        }
      }
    }
  }
  return out;
}

std::vector<SpannerReport> run_sweep(const SweepPlan& plan, std::ostream& csv) {
  plan.validate();
  const auto instances = expand(plan);
  std::vector<SpannerReport> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const int threads = plan.threads > 0 ? plan.threads : omp_get_max_threads();
  csv << kReportHeader << '\n' << std::flush;
  const auto count = static_cast<std::int64_t>(instances.size());
  bool failed = false;
#pragma omp parallel for ordered schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const SweepInstance& inst = instances[i];
      const Graph g = generate(parse_generator_spec(inst.generator, inst.seed));
      BuildRequest request;
      request.t = inst.t;
      request.algorithm = inst.algorithm;
      request.strategy = inst.algorithm == "seq" ? "greedy" : inst.strategy;
      request.seed = inst.seed;
      auto outcome = run_build(g, request, plan.analysis);
      if (!outcome.ok()) {
        throw InternalError("sweep instance " + inst.generator + " t=" + std::to_string(inst.t) +
                            " failed self-verification");
      }
      rows[i] = std::move(outcome.report);
    } catch (...) {
      errors[i] = std::current_exception();
    }
#pragma omp ordered
    {
      if (errors[i]) failed = true;
      if (!failed) csv << to_csv_row(rows[i]) << '\n' << std::flush;
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<SpannerReport> run_sweep(const SweepPlan& plan) {
  if (plan.out.empty()) throw InputError("plan has no out path");
  std::ofstream csv(plan.out);
  if (!csv) throw InputError("cannot open " + plan.out.string() + " for writing");
  auto rows = run_sweep(plan, csv);
  if (plan.svg) {
    std::ofstream svg(*plan.svg);
    if (!svg) throw InputError("cannot open " + plan.svg->string() + " for writing");
    write_svg(svg, rows);
  }
  return rows;
}

void write_svg(std::ostream& out, const std::vector<SpannerReport>& rows) {
  constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  std::map<int, std::vector<std::pair<double, double>>> series;
  for (const auto& r : rows) {
    if (r.n == 0 || r.m_spanner == 0) continue;
    const double x = std::log2(static_cast<double>(r.n));
    const double y = std::log2(static_cast<double>(r.m_spanner));
    series[r.t].emplace_back(x, y);
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (series.empty()) {
    x_lo = y_lo = 0;
    x_hi = y_hi = 1;
  }
  x_lo = std::floor(x_lo);
  y_lo = std::floor(y_lo);
  x_hi = std::max(std::ceil(x_hi), x_lo + 1);
  y_hi = std::max(std::ceil(y_hi), y_lo + 1);
  auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  };
  static const char* kColors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

  out << std::fixed << std::setprecision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  for (double x = x_lo; x <= x_hi; x += 1) {
    out << "<text x=\"" << px(x) << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">2^" << static_cast<int>(x) << "</text>\n";
  }
  for (double y = y_lo; y <= y_hi; y += 1) {
    out << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">2^"
        << static_cast<int>(y) << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\">n</text>\n";
  out << "<text x=\"16\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 16 " << kHeight / 2
      << ")\" text-anchor=\"middle\">m_spanner</text>\n";
  std::size_t idx = 0;
  for (const auto& [t, points] : series) {
    const char* color = kColors[idx % std::size(kColors)];
    for (const auto& [x, y] : points) {
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\"" << color
          << "\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMargin + 8 << "\" y=\"" << kMargin + 16 * idx << "\" fill=\""
        << color << "\">t=" << t << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
}

}  // namespace pgspan
