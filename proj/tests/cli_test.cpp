// Copyright 2026 The ntdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "ntdyn/ntdyn.hpp"

namespace ntdyn {
namespace {

namespace fs = std::filesystem;
using io::json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ntdyn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  /// Runs the tool with stdout captured to out.txt; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " '" + std::string(NTDYN_CLI_PATH) + "' " + args + " > '" + path("out.txt") +
                      "' 2> '" + path("err.txt") + "'";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out() const { return io::read_file(path("out.txt")); }
  std::string err() const { return io::read_file(path("err.txt")); }
  json out_json() const { return io::parse_text(out()); }

  fs::path dir_;
};

TEST_F(Cli, GenWheelDocument) {
  ASSERT_EQ(run("gen --family wheel --n 5"), 0);
  auto g = io::graph_from_json(out_json());
  EXPECT_EQ(g, wheel(5));
}

TEST_F(Cli, GenRejectsSmallWheel) {
  EXPECT_EQ(run("gen --family wheel --n 2"), 2);
  EXPECT_NE(err().find("wheel"), std::string::npos);
  EXPECT_EQ(run("gen --family dodecahedron --n 5"), 2);
  EXPECT_EQ(run("gen --n notanumber"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, GenIsDigestStableAndWritesManifest) {
  const std::string args = "gen --family random_nt --t 6 --n 60 --flips 200 --seed 42";
  ASSERT_EQ(run(args + " --out '" + path("a.json") + "' --manifest '" + path("m.json") + "' --dot '" +
                path("a.dot") + "'"),
            0);
  ASSERT_EQ(run(args + " --out '" + path("b.json") + "' --manifest '" + path("m.json") + "'"), 0);
  EXPECT_EQ(io::read_file(path("a.json")), io::read_file(path("b.json")));
  auto m = io::parse_text(io::read_file(path("m.json")));
  ASSERT_EQ(m.at("entries").size(), 2u);
  EXPECT_EQ(m["entries"][0]["digest"], m["entries"][1]["digest"]);
  EXPECT_EQ(m["entries"][0]["digest"].get<std::string>(), io::digest(io::read_file(path("a.json"))));
  EXPECT_EQ(io::graph_from_json(io::parse_text(io::read_file(path("a.json")))),
            random_near_triangulation(6, 60, 200, 42));
  EXPECT_EQ(io::read_file(path("a.dot")).rfind("graph G {", 0), 0u);
}

TEST_F(Cli, SeedEnvironmentOverride) {
  ASSERT_EQ(run("gen --family stacked --t 5 --n 30 --seed 1 --out '" + path("a.json") + "'", "NT_SEED=99"), 0);
  ASSERT_EQ(run("gen --family stacked --t 5 --n 30 --seed 99 --out '" + path("b.json") + "'"), 0);
  EXPECT_EQ(io::read_file(path("a.json")), io::read_file(path("b.json")));
  EXPECT_EQ(run("gen --family stacked --t 5 --n 30", "NT_SEED=abc"), 2);
}

TEST_F(Cli, ColorW5UniformSix) {
  io::write_file(path("w5.json"), io::dump(io::graph_to_json(wheel(5))));
  ASSERT_EQ(run("color '" + path("w5.json") + "' --uniform 6 --out '" + path("c.json") + "' --trace '" +
                path("t.json") + "' --dot '" + path("c.dot") + "'"),
            0);
  auto report = out_json();
  EXPECT_EQ(report["outcome"], "colored");
  EXPECT_EQ(report["colors_used"], 6);
  EXPECT_TRUE(report["verdict"]["ok"].get<bool>());
  auto phi = io::coloring_from_json(io::parse_text(io::read_file(path("c.json"))));
  EXPECT_TRUE(is_r_dynamic(wheel(5), phi, 3));
  auto trace = io::trace_from_json(io::parse_text(io::read_file(path("t.json"))));
  EXPECT_EQ(replay(trace), wheel(5));
  EXPECT_EQ(run("verify '" + path("w5.json") + "' '" + path("c.json") + "' --r 3"), 0);
}

TEST_F(Cli, ColorW5UniformFiveExploreIsInfeasible) {
  io::write_file(path("w5.json"), io::dump(io::graph_to_json(wheel(5))));
  EXPECT_EQ(run("color '" + path("w5.json") + "' --uniform 5 --explore --witness '" + path("w.json") + "'"), 4);
  auto report = out_json();
  EXPECT_TRUE(report["witness"]["proven_infeasible"].get<bool>());
  auto lists = io::lists_from_json(io::parse_text(io::read_file(path("w.json"))));
  EXPECT_EQ(lists.lists(), ListAssignment::uniform(6, 5).lists());
  EXPECT_EQ(run("color '" + path("w5.json") + "' --uniform 5"), 3);
}

TEST_F(Cli, ColorRandomListsOnRandomNearTriangulation) {
  io::write_file(path("g.json"), io::dump(io::graph_to_json(random_near_triangulation(6, 60, 200, 42))));
  ASSERT_EQ(run("color '" + path("g.json") + "' --random-lists 6 --pool 40 --seed 1 --out '" + path("c.json") + "'"),
            0);
  auto g = random_near_triangulation(6, 60, 200, 42);
  auto lists = random_lists(g, 6, 40, 1);
  io::write_file(path("l.json"), io::dump(io::lists_to_json(lists)));
  EXPECT_EQ(run("verify '" + path("g.json") + "' '" + path("c.json") + "' --lists '" + path("l.json") + "'"), 0);
  // Same lists given as a file produce the same colouring.
  ASSERT_EQ(run("color '" + path("g.json") + "' --lists '" + path("l.json") + "' --out '" + path("d.json") + "'"), 0);
  EXPECT_EQ(io::read_file(path("c.json")), io::read_file(path("d.json")));
}

TEST_F(Cli, ColorPreconditions) {
  io::write_file(path("c7.json"), R"({"n": 3, "rotation": [[1, 2], [2, 0], [0, 1]], "outer_face": [0, 1, 2]})");
  EXPECT_EQ(run("color '" + path("c7.json") + "' --uniform 6"), 0);  // a triangle is a near-triangulation
  auto sq = io::parse_text(R"({"n": 4, "rotation": [[1, 3], [2, 0], [3, 1], [0, 2]], "outer_face": [0, 1, 2, 3]})");
  io::write_file(path("sq.json"), io::dump(sq));
  EXPECT_EQ(run("color '" + path("sq.json") + "' --uniform 6"), 3);
  EXPECT_EQ(run("color '" + path("sq.json") + "' --uniform 6 --random-lists 6"), 2);
  io::write_file(path("bad.json"), "{ nope");
  EXPECT_EQ(run("color '" + path("bad.json") + "' --uniform 6"), 2);
}

TEST_F(Cli, VerifyNamesViolations) {
  io::write_file(path("w5.json"), io::dump(io::graph_to_json(wheel(5))));
  // Hub coloured 1, rim 2 3 2 3 4: rim vertex 2 sees only {1, 2}.
  io::write_file(path("dyn.json"), io::dump(io::coloring_to_json(Coloring({1, 2, 3, 2, 3, 4}))));
  EXPECT_EQ(run("verify '" + path("w5.json") + "' '" + path("dyn.json") + "' --r 3"), 1);
  auto report = out_json();
  EXPECT_EQ(report["verdict"]["violation"]["kind"], "not_dynamic");
  EXPECT_EQ(report["verdict"]["violation"]["vertex"], 2);
  EXPECT_EQ(run("verify '" + path("w5.json") + "' '" + path("dyn.json") + "' --r 2"), 0);

  io::write_file(path("mono.json"), io::dump(io::coloring_to_json(Coloring({1, 1, 2, 3, 4, 5}))));
  EXPECT_EQ(run("verify '" + path("w5.json") + "' '" + path("mono.json") + "'"), 1);
  EXPECT_EQ(out_json()["verdict"]["violation"]["kind"], "monochromatic_edge");

  io::write_file(path("garbage.json"), "[1, 2");
  EXPECT_EQ(run("verify '" + path("w5.json") + "' '" + path("garbage.json") + "'"), 2);
}

TEST_F(Cli, ChiMatchesGoldenWheels) {
  auto golden = io::parse_text(io::read_file(std::string(NTDYN_GOLDEN_DIR) + "/chi_wheels.json"));
  const int r = golden.at("r").get<int>();
  for (const auto& [n, expected] : golden.at("chi").items()) {
    io::write_file(path("w.json"), io::dump(io::graph_to_json(wheel(std::stoi(n)))));
    ASSERT_EQ(run("chi '" + path("w.json") + "' --r " + std::to_string(r)), 0) << "W_" << n;
    EXPECT_EQ(out_json()["chi"], expected) << "W_" << n;
  }
}

TEST_F(Cli, ChiCapAndBudget) {
  io::write_file(path("big.json"), io::dump(io::graph_to_json(stacked(3, 20, 1))));
  EXPECT_EQ(run("chi '" + path("big.json") + "' --r 3"), 2);
  io::write_file(path("w.json"), io::dump(io::graph_to_json(wheel(5))));
  EXPECT_EQ(run("chi '" + path("w.json") + "' --r 3 --budget 3"), 1);
  EXPECT_EQ(out_json()["outcome"], "budget_exhausted");
}

TEST_F(Cli, StressSmallRunsAndIsReproducible) {
  ASSERT_EQ(run("stress --count 40 --max-n 40 --seed 3 --report '" + path("a.json") + "'"), 0);
  ASSERT_EQ(run("stress --count 40 --max-n 40 --seed 3 --jobs 4 --report '" + path("b.json") + "'"), 0);
  EXPECT_EQ(io::read_file(path("a.json")), io::read_file(path("b.json")));
  auto rep = io::parse_text(io::read_file(path("a.json")));
  EXPECT_EQ(rep["failures"], 0);
  EXPECT_LE(rep["max_forbidden"].get<int>(), 5);
}

TEST_F(Cli, StressEdgeCases) {
  ASSERT_EQ(run("stress --count 0"), 0);
  EXPECT_EQ(out_json()["instances"], 0);
  EXPECT_EQ(run("stress --count 5 --lists 5"), 3);
  EXPECT_EQ(run("stress --count 30 --max-n 12 --lists 3 --pool 4 --seed 7 --explore"), 0);
  auto rep = out_json();
  EXPECT_GT(rep["failures"].get<int>(), 0);
  EXPECT_EQ(rep["failed_instances"].size(), rep["failures"].get<std::size_t>());
}

}  // namespace
}  // namespace ntdyn
