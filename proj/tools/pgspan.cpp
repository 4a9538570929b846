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

// pgspan command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input/IO/parse errors,
// 3 internal invariant failures.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "pgspan/errors.hpp"
#include "pgspan/generators.hpp"
#include "pgspan/harness.hpp"
#include "pgspan/io.hpp"
#include "pgspan/lc_cuts.hpp"
#include "pgspan/pg_analysis.hpp"
#include "pgspan/pg_sequence.hpp"
#include "pgspan/routing.hpp"

namespace {

using namespace pgspan;

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct GraphSource {
  std::string gen;
  std::string input;
  std::uint64_t seed = 0;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("--gen", gen, "generator spec, e.g. er:256:0.1, hypercube:6, cycle:4");
    auto* i = cmd->add_option("--input,--graph", input, "edge-list file");
    g->excludes(i);
  }

  Graph load() const {
    if (!gen.empty()) return generate(parse_generator_spec(gen, seed));
    if (!input.empty()) return read_graph(std::filesystem::path(input));
    throw InputError("one of --gen or --input is required");
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

void print_arboricity(std::ostream& out, const ArboricityResult& a) {
  if (a.exact) {
    out << "arboricity: " << *a.exact << '\n';
  } else {
    out << "arboricity: " << a.lower << ".." << a.upper << " (bounds)\n";
  }
}

std::string girth_string(const std::optional<std::uint32_t>& g) {
  return g ? std::to_string(*g) : "inf";
}

int cmd_build(const GraphSource& src, const BuildRequest& request, const std::string& script_path,
              const std::string& out_prefix, const AnalysisToggles& analysis) {
  const Graph g = src.load();
  BuildRequest req = request;
  if (req.strategy == "scripted") {
    if (script_path.empty()) throw InputError("strategy scripted needs --script");
    req.script = read_certificate(std::filesystem::path(script_path), g.vertex_count()).rounds;
  }
  const BuildOutcome outcome = run_build(g, req, analysis);
  const auto& r = outcome.report;
  std::cout << "n: " << r.n << "\nm_input: " << r.m_input << "\nm_spanner: " << r.m_spanner
            << "\nrounds: " << r.rounds << "\ngirth: "
            << (r.girth_computed ? girth_string(r.girth) : "-") << "\ndegeneracy: " << r.degeneracy
            << '\n';
  print_arboricity(std::cout, r.arboricity);
  std::cout << "max_stretch: " << r.max_stretch << '\n';
  if (outcome.certificate_violation) {
    std::cout << "certificate: rejected (" << outcome.certificate_violation->describe() << ")\n";
  } else {
    std::cout << "certificate: accepted\n";
  }
  if (!out_prefix.empty()) {
    write_graph(outcome.result.spanner, out_prefix + ".edges");
    write_certificate(outcome.result.certificate, out_prefix + ".cert");
    auto rounds = open_out(out_prefix + ".rounds.csv");
    rounds << "round,matching_size,cumulative_edges,millis\n";
    for (const auto& s : outcome.result.rounds) {
      rounds << s.round << ',' << s.matching_size << ',' << s.cumulative_edges << ',' << s.millis
             << '\n';
    }
    std::vector<SpannerReport> row{r};
    write_report_csv(row, out_prefix + ".report.csv");
  }
  if (!outcome.stretch.valid()) {
    const Edge e = *outcome.stretch.violating_edge;
    std::cerr << "error: edge " << e.u << "-" << e.v << " has stretch > " << req.t << '\n';
    return kExitVerify;
  }
  return outcome.certificate_violation ? kExitVerify : 0;
}

int cmd_verify(const std::string& graph_path, const std::string& spanner_path,
               const std::string& cert_path, int t) {
  const Graph g = read_graph(std::filesystem::path(graph_path));
  const Graph h = read_graph(std::filesystem::path(spanner_path));
  const StretchReport stretch = verify_spanner(g, h, t);
  std::cout << "max_stretch: " << stretch.max_stretch_string() << "\nviolations: " << stretch.violations
            << '\n';
  int code = 0;
  if (!stretch.valid()) {
    const Edge e = *stretch.violating_edge;
    std::cout << "violating_edge: " << e.u << "-" << e.v << '\n';
    code = kExitVerify;
  }
  if (!cert_path.empty()) {
    const PgSequence seq = read_certificate(std::filesystem::path(cert_path), g.vertex_count());
    if (auto v = verify_pg_sequence(g.vertex_count(), seq, t)) {
      std::cout << "certificate: rejected (" << v->describe() << ")\n";
      code = kExitVerify;
    } else {
      std::cout << "certificate: accepted (" << seq.rounds.size() << " rounds, "
                << seq.edge_count() << " edges)\n";
    }
  }
  return code;
}

int cmd_stats(const GraphSource& src, const ArboricityBudget& budget) {
  const Graph g = src.load();
  std::cout << "n: " << g.vertex_count() << "\nm: " << g.edge_count()
            << "\naverage_degree: " << to_string(average_degree(g)) << "\ngirth: "
            << girth_string(girth(g)) << "\ndegeneracy: " << degeneracy(g).k << '\n';
  print_arboricity(std::cout, arboricity_exact(g, budget));
  return 0;
}

int cmd_sweep(const std::string& plan_path, const std::string& out, const std::string& svg,
              int threads) {
  SweepPlan plan = parse_plan(std::filesystem::path(plan_path));
  if (!out.empty()) plan.out = out;
  if (!svg.empty()) plan.svg = svg;
  if (threads > 0) plan.threads = threads;
  if (plan.out.empty()) {
    run_sweep(plan, std::cout);
  } else {
    const auto rows = run_sweep(plan);
    std::cout << "rows: " << rows.size() << "\nout: " << plan.out.string() << '\n';
  }
  return 0;
}

std::vector<Edge> parse_matching(const std::string& inline_list, const std::string& path) {
  std::vector<Edge> out;
  auto parse_pair = [&](const std::string& text) {
    std::istringstream in(text);
    long long u = -1, v = -1;
    char dash = 0;
    if (!(in >> u >> dash >> v) || dash != '-' || u < 0 || v < 0) {
      throw InputError("bad matching edge '" + text + "' (expected u-v)");
    }
    out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  };
  if (!inline_list.empty()) {
    std::istringstream in(inline_list);
    std::string item;
    while (std::getline(in, item, ',')) parse_pair(item);
  }
  if (!path.empty()) {
    auto in = open_in(path);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      std::istringstream ls(line);
      long long u = -1, v = -1;
      if (!(ls >> u)) continue;
      if (!(ls >> v) || u < 0 || v < 0) throw ParseError(no, "expected '<u> <v>'");
      out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  if (out.empty()) throw InputError("empty matching (use --matching or --matching-file)");
  return out;
}

int cmd_route_check(const std::string& graph_path, const std::vector<Edge>& matching,
                    const std::string& delta, int t, const std::string& cap, double epsilon,
                    const std::string& flow_out) {
  if (t < 1) throw InputError("--t must be positive");
  const Graph g = read_graph(std::filesystem::path(graph_path));
  RoutingOptions opts;
  opts.epsilon = epsilon;
  const auto result = route_matching(g, matching, parse_rational(delta), static_cast<std::uint32_t>(t),
                                     parse_rational(cap), opts);
  std::cout << (result.feasible ? "feasible" : "infeasible") << "\npaths: " << result.paths
            << "\nphases: " << result.phases << "\nlower_bound: " << result.lower_bound
            << "\nupper_bound: " << result.upper_bound << '\n';
  if (result.congestion) std::cout << "congestion: " << to_string(*result.congestion) << '\n';
  if (result.feasible) {
    std::cout << "dilation: " << result.flow->dilation() << '\n';
    if (!flow_out.empty()) {
      auto out = open_out(flow_out);
      write_flow(out, *result.flow);
    }
  }
  return 0;
}

MovingCut load_cut(const std::string& path, const Graph& g) {
  auto in = open_in(path);
  return read_cut(in, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgspan: greedy spanner construction and certificate analysis"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)");

  // build
  auto* build = app.add_subcommand("build", "construct a t-spanner and self-verify it");
  GraphSource build_src;
  BuildRequest request;
  std::string script_path, out_prefix, order = "input";
  AnalysisToggles analysis;
  bool no_girth = false;
  build_src.add_to(build);
  build->add_option("--seed", build_src.seed, "seed for generators, edge order and matchings");
  build->add_option("--t", request.t, "stretch")->default_val(3);
  build->add_option("--algo", request.algorithm, "seq or par")->check(CLI::IsMember({"seq", "par"}));
  build->add_option("--strategy", request.strategy,
                    "greedy, lex, single, scripted-fig2, dimensions, scripted");
  build->add_option("--script", script_path, "rounds for --strategy scripted (certificate format)");
  build->add_option("--order", order, "seq scan order: input or shuffle")
      ->check(CLI::IsMember({"input", "shuffle"}));
  build->add_option("--out", out_prefix, "write <prefix>.edges/.cert/.rounds.csv/.report.csv");
  build->add_flag("--no-girth", no_girth, "skip the girth column");
  build->add_option("--arboricity-budget", analysis.arboricity.max_vertices,
                    "exact arboricity only up to this many vertices");

  // verify
  auto* verify = app.add_subcommand("verify", "check a spanner and its certificate");
  std::string v_graph, v_spanner, v_cert;
  int v_t = 3;
  verify->add_option("--graph", v_graph)->required();
  verify->add_option("--spanner", v_spanner)->required();
  verify->add_option("--cert", v_cert, "certificate to check");
  verify->add_option("--t", v_t)->required();

  // stats
  auto* stats = app.add_subcommand("stats", "girth, degeneracy and arboricity of a graph");
  GraphSource stats_src;
  ArboricityBudget stats_budget;
  stats_src.add_to(stats);
  stats->add_option("--seed", stats_src.seed);
  stats->add_option("--arboricity-budget", stats_budget.max_vertices);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a plan file and write a CSV report");
  std::string plan_path, sweep_out, sweep_svg;
  sweep->add_option("plan", plan_path, "plan file")->required();
  sweep->add_option("--out", sweep_out, "override the plan's out path");
  sweep->add_option("--svg", sweep_svg, "write a log-log scatter of m_spanner vs n");

  // route-check
  auto* route = app.add_subcommand("route-check", "length-bounded routability of a matching");
  std::string r_graph, r_matching, r_matching_file, r_delta = "1", r_cap = "1", r_flow;
  int r_t = 3;
  double r_eps = 0.05;
  route->add_option("--graph", r_graph)->required();
  route->add_option("--matching", r_matching, "inline list u-v,u-v");
  route->add_option("--matching-file", r_matching_file, "file of '<u> <v>' lines");
  route->add_option("--delta", r_delta, "value per matched pair (rational)");
  route->add_option("--t", r_t, "dilation bound");
  route->add_option("--cap", r_cap, "congestion cap (rational)");
  route->add_option("--epsilon", r_eps);
  route->add_option("--flow-out", r_flow, "write the flow when feasible");

  // cut
  auto* cut = app.add_subcommand("cut", "moving cuts, separated demand and sparsity");
  cut->require_subcommand(1);
  std::string c_graph, c_cut, c_demand, c_out, c_h = "1";
  std::uint32_t c_hi = 1, c_s = 1;
  auto* apply = cut->add_subcommand("apply", "write G - C with lengthened edges");
  apply->add_option("--graph", c_graph)->required();
  apply->add_option("--cut", c_cut)->required();
  apply->add_option("--out", c_out, "output edge list (stdout when absent)");
  auto* sep = cut->add_subcommand("sep", "separated demand sep_h(C, D)");
  sep->set_help_flag("--help", "print this help and exit");  // --h is the length bound
  sep->add_option("--graph", c_graph)->required();
  sep->add_option("--cut", c_cut)->required();
  sep->add_option("--demand", c_demand)->required();
  sep->add_option("--h", c_h, "length bound (rational)");
  auto* sparsity = cut->add_subcommand("sparsity", "(h,s)-length sparsity of an hs-length cut");
  sparsity->set_help_flag("--help", "print this help and exit");  // --h is the length bound
  sparsity->add_option("--graph", c_graph)->required();
  sparsity->add_option("--cut", c_cut)->required();
  sparsity->add_option("--h", c_hi)->required();
  sparsity->add_option("--s", c_s)->required();
  sparsity->add_option("--witness-out", c_out, "write a maximizing demand");
  auto* expd = cut->add_subcommand("expdemand", "exponential demand and its vertex lift");
  expd->set_help_flag("--help", "print this help and exit");  // --h is the length bound
  expd->add_option("--graph", c_graph)->required();
  expd->add_option("--h", c_hi)->required();
  expd->add_option("--s", c_s)->required();
  expd->add_option("--out", c_out, "write the vertex demand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (threads > 0) omp_set_num_threads(threads);
    if (*build) {
      request.edge_order = order == "shuffle" ? EdgeOrder::RandomShuffle : EdgeOrder::Input;
      request.seed = build_src.seed;
      analysis.girth = !no_girth;
      return cmd_build(build_src, request, script_path, out_prefix, analysis);
    }
    if (*verify) return cmd_verify(v_graph, v_spanner, v_cert, v_t);
    if (*stats) return cmd_stats(stats_src, stats_budget);
    if (*sweep) return cmd_sweep(plan_path, sweep_out, sweep_svg, threads);
    if (*route) {
      return cmd_route_check(r_graph, parse_matching(r_matching, r_matching_file), r_delta, r_t,
                             r_cap, r_eps, r_flow);
    }
    if (*cut) {
      const Graph g = read_graph(std::filesystem::path(c_graph));
      if (*apply) {
        const Graph cg = apply_cut(g, load_cut(c_cut, g));
        if (c_out.empty()) {
          write_graph(std::cout, cg);
        } else {
          write_graph(cg, c_out);
        }
      } else if (*sep) {
        auto in = open_in(c_demand);
        const Demand d = read_demand(in, g.vertex_count());
        const MovingCut c = load_cut(c_cut, g);
        const Rational h = parse_rational(c_h);
        std::cout << "separated: " << to_string(separated(g, c, d, h)) << "\ncut_size: "
                  << to_string(c.size()) << '\n';
        if (auto s = sparsity_wrt_demand(g, c, d, h)) {
          std::cout << "sparsity: " << to_string(*s) << '\n';
        } else {
          std::cout << "sparsity: inf\n";
        }
      } else if (*sparsity) {
        const MovingCut c = load_cut(c_cut, g);
        const auto r = cut_sparsity(g, c, c_hi, c_s);
        std::cout << "cut_size: " << to_string(c.size()) << "\nmax_separated: "
                  << to_string(r.max_separated) << "\nsparsity: "
                  << (r.sparsity ? to_string(*r.sparsity) : std::string("inf")) << '\n';
        if (!c_out.empty()) {
          auto out = open_out(c_out);
          write_demand(out, r.witness);
        }
      } else if (*expd) {
        const auto ed = exponential_demand(g, c_hi, c_s);
        bool rows_ok = true;
        for (const auto& row : ed.edge_demand) {
          Rational sum(0);
          for (const auto& x : row) sum += x;
          rows_ok = rows_ok && sum == 1;
        }
        std::cout << "radius: " << to_string(ed.radius) << "\nrows_sum_to_one: "
                  << (rows_ok ? "yes" : "no") << "\nunit: " << (ed.vertex_demand.is_unit(g) ? "yes" : "no")
                  << "\nsize: " << to_string(ed.vertex_demand.size()) << '\n';
        if (!c_out.empty()) {
          auto out = open_out(c_out);
          write_demand(out, ed.vertex_demand);
        }
      }
      return 0;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ScriptViolation& e) {
    std::cerr << "script rejected: " << e.what() << '\n';
    return kExitVerify;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
