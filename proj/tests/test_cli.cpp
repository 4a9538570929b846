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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PGSPAN_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pgspan_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, BuildScriptedC4) {
  auto r = run("build --gen cycle:4 --t 3 --algo par --strategy scripted-fig2 --out " + path("fig2"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("m_spanner: 4"), std::string::npos);
  EXPECT_NE(r.out.find("girth: 4"), std::string::npos);
  EXPECT_EQ(slurp(path("fig2.cert")), "r 1 : 0-1 2-3\nr 2 : 1-2 0-3\n");
  EXPECT_TRUE(fs::exists(path("fig2.edges")));
  EXPECT_TRUE(fs::exists(path("fig2.rounds.csv")));
  EXPECT_NE(slurp(path("fig2.report.csv")).find("4,4,3,par,scripted-fig2,0,4,2,4,2,2,1,"),
            std::string::npos);
}

TEST_F(CliTest, BuildHypercubeDimensions) {
  auto r = run("build --gen hypercube:10 --t 5 --algo par --strategy dimensions");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("m_spanner: 5120"), std::string::npos);
}

TEST_F(CliTest, BuildForestSequential) {
  write("tree.edges", "p 6 5\ne 0 1\ne 0 2\ne 1 3\ne 1 4\ne 2 5\n");
  auto r = run("build --input " + path("tree.edges") + " --t 7 --algo seq --out " + path("tree"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("max_stretch: 1"), std::string::npos);
  EXPECT_EQ(slurp(path("tree.edges")), "p 6 5\ne 0 1\ne 0 2\ne 1 3\ne 1 4\ne 2 5\n");
}

TEST_F(CliTest, VerifyTamperedSpanner) {
  ASSERT_EQ(run("build --gen petersen --t 3 --algo par --out " + path("p")).code, 0);
  // The full Petersen graph as the input.
  std::string full = "p 10 15\n";
  for (int i = 0; i < 5; ++i) {
    full += "e " + std::to_string(i) + " " + std::to_string((i + 1) % 5) + "\n";
    full += "e " + std::to_string(5 + i) + " " + std::to_string(5 + (i + 2) % 5) + "\n";
    full += "e " + std::to_string(i) + " " + std::to_string(i + 5) + "\n";
  }
  write("petersen.edges", full);
  auto ok = run("verify --graph " + path("petersen.edges") + " --spanner " + path("p.edges") +
                " --cert " + path("p.cert") + " --t 3");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("certificate: accepted"), std::string::npos);
  // Drop the first edge line of the spanner.
  std::istringstream in(slurp(path("p.edges")));
  std::string header, dropped, line, rest;
  std::getline(in, header);
  std::getline(in, dropped);
  int m = 0;
  while (std::getline(in, line)) {
    rest += line + "\n";
    ++m;
  }
  write("bad.edges", "p 10 " + std::to_string(m) + "\n" + rest);
  auto bad = run("verify --graph " + path("petersen.edges") + " --spanner " + path("bad.edges") +
                 " --t 3");
  EXPECT_EQ(bad.code, 1) << bad.out;
  std::istringstream fields(dropped);
  std::string tag, u, v;
  fields >> tag >> u >> v;
  EXPECT_NE(bad.out.find("violating_edge: " + u + "-" + v), std::string::npos) << bad.out;
}

TEST_F(CliTest, StatsOnK4) {
  auto r = run("stats --gen complete:4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("girth: 3"), std::string::npos);
  EXPECT_NE(r.out.find("degeneracy: 3"), std::string::npos);
  EXPECT_NE(r.out.find("arboricity: 2"), std::string::npos);
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  write("bad.edges", "p 3 2\ne 0 1\ne 1\n");
  auto r = run("stats --input " + path("bad.edges"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 3"), std::string::npos);
  EXPECT_EQ(run("stats --input " + path("missing.edges")).code, 2);
  EXPECT_EQ(run("build --gen cycle:5 --strategy scripted-fig2").code, 2);
  EXPECT_EQ(run("build --gen cycle:4 --t 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(CliTest, ScriptedBuildRejectsBadScript) {
  write("script.cert", "r 1 : 0-1\nr 2 : 1-2\nr 3 : 2-3\nr 4 : 0-3\n");
  auto r = run("build --gen cycle:4 --t 3 --strategy scripted --script " + path("script.cert"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("round 4"), std::string::npos);
}

TEST_F(CliTest, SweepIsDeterministic) {
  write("plan.txt",
        "# small sweep\n"
        "gens = er:64:0.2, er:128:0.1, er:256:0.05\n"
        "t = 3,5,7\n"
        "algo = par\n"
        "strategies = greedy\n"
        "seeds = 1\n"
        "arboricity_budget = 128\n");
  auto a = run("sweep " + path("plan.txt") + " --out " + path("a.csv") + " --svg " + path("a.svg"));
  auto b = run("sweep " + path("plan.txt") + " --out " + path("b.csv"));
  ASSERT_EQ(a.code, 0) << a.out;
  ASSERT_EQ(b.code, 0) << b.out;
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  const std::string csv = slurp(path("a.csv"));
  EXPECT_EQ(strip(csv), strip(slurp(path("b.csv"))));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_NE(slurp(path("a.svg")).find("<svg"), std::string::npos);
  write("bad_plan.txt", "gens = er:64:0.2\nt = 3\nwhat = 1\n");
  EXPECT_EQ(run("sweep " + path("bad_plan.txt")).code, 2);
}

TEST_F(CliTest, RouteCheck) {
  write("c4.edges", "p 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n");
  auto ok = run("route-check --graph " + path("c4.edges") +
                " --matching 0-1,2-3 --delta 1 --t 1 --cap 1 --flow-out " + path("f.txt"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("feasible"), std::string::npos);
  EXPECT_EQ(ok.out.find("infeasible"), std::string::npos);
  EXPECT_EQ(slurp(path("f.txt")), "f 1 : 0 1\nf 1 : 2 3\n");
  auto no = run("route-check --graph " + path("c4.edges") +
                " --matching 0-1,2-3 --delta 1 --t 3 --cap 1/2");
  EXPECT_EQ(no.code, 0);
  EXPECT_NE(no.out.find("infeasible"), std::string::npos);
}

TEST_F(CliTest, CutSubcommands) {
  write("c6.edges", "p 6 6\ne 0 1\ne 0 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
  write("cut.txt", "c 0 1 4/4\n");
  auto sp = run("cut sparsity --graph " + path("c6.edges") + " --cut " + path("cut.txt") +
                " --h 1 --s 4 --witness-out " + path("w.txt"));
  EXPECT_EQ(sp.code, 0) << sp.out;
  EXPECT_NE(sp.out.find("max_separated: 4"), std::string::npos);
  EXPECT_NE(sp.out.find("sparsity: 1/4"), std::string::npos);
  EXPECT_EQ(slurp(path("w.txt")), "d 0 1 2\nd 1 0 2\n");
  auto sep = run("cut sep --graph " + path("c6.edges") + " --cut " + path("cut.txt") + " --demand " +
                 path("w.txt") + " --h 4");
  EXPECT_EQ(sep.code, 0) << sep.out;
  EXPECT_NE(sep.out.find("separated: 4"), std::string::npos);
  auto apply = run("cut apply --graph " + path("c6.edges") + " --cut " + path("cut.txt"));
  EXPECT_EQ(apply.code, 0);
  EXPECT_NE(apply.out.find("e 0 1 5"), std::string::npos);
  auto ed = run("cut expdemand --graph " + path("c6.edges") + " --h 1 --s 2");
  EXPECT_EQ(ed.code, 0) << ed.out;
  EXPECT_NE(ed.out.find("rows_sum_to_one: yes"), std::string::npos);
  EXPECT_NE(ed.out.find("unit: yes"), std::string::npos);
}

}  // namespace
