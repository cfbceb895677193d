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

#include "ntdyn/io.hpp"

#include <gtest/gtest.h>

#include "ntdyn/generators.hpp"
#include "ntdyn/reducer.hpp"
#include "test_support.hpp"

namespace ntdyn {
namespace {

using testing::code_of;

TEST(GraphJson, RoundTrip) {
  for (auto g : {wheel(5), fan(6), testing::octahedron(), random_near_triangulation(7, 40, 120, 3)}) {
    auto j = io::graph_to_json(g);
    EXPECT_EQ(j.at("n").get<int>(), g.vertex_count());
    EXPECT_EQ(io::graph_from_json(io::parse_text(io::dump(j))), g);
  }
}

TEST(GraphJson, TombstonesAreDensified) {
  auto g = remove_vertex(wheel(5), 2);
  auto j = io::graph_to_json(g);
  EXPECT_EQ(j.at("n").get<int>(), 5);
  auto back = io::graph_from_json(j);
  EXPECT_EQ(back.id_bound(), 5);
  EXPECT_EQ(back.edge_count(), g.edge_count());
  EXPECT_EQ(io::densify(g, std::vector<int>{10, 11, 12, 13, 14, 15}, 0), (std::vector<int>{10, 11, 13, 14, 15}));
}

TEST(GraphJson, Errors) {
  EXPECT_EQ(code_of([] { io::parse_text("{\"n\": 3,"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(io::parse_text("{\"n\": 3}")); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(io::parse_text(R"({"n": 2, "rotation": [[1]], "outer_face": []})")); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] {
              io::graph_from_json(io::parse_text(R"({"n": 2, "rotation": [[1], [5]], "outer_face": [0, 1]})"));
            }),
            Errc::MalformedEmbedding);
  EXPECT_EQ(code_of([] {
              io::graph_from_json(io::parse_text(R"({"n": 2, "rotation": [[1], []], "outer_face": [0, 1]})"));
            }),
            Errc::MalformedEmbedding);
}

TEST(ListsAndColours, RoundTrip) {
  auto g = wheel(6);
  auto lists = random_lists(g, 6, 40, 5);
  EXPECT_EQ(io::lists_from_json(io::lists_to_json(lists)).lists(), lists.lists());
  Coloring phi({3, 1, 2, 1, 2, 1, 2});
  EXPECT_EQ(io::coloring_from_json(io::coloring_to_json(phi)).colors, phi.colors);
  EXPECT_EQ(code_of([] { io::lists_from_json(io::parse_text(R"({"lists": [[0, 1]]})")); }), Errc::InvalidParameter);
  EXPECT_EQ(code_of([] { io::coloring_from_json(io::parse_text(R"({"colours": []})")); }), Errc::ParseError);
}

TEST(TraceJson, RoundTripAndReplay) {
  auto g = random_near_triangulation(5, 30, 90, 8);
  auto out = color_near_triangulation(g, ListAssignment::uniform(g.id_bound(), 6));
  auto text = io::dump(io::trace_to_json(out.trace));
  auto back = io::trace_from_json(io::parse_text(text));
  ASSERT_EQ(back.steps.size(), out.trace.steps.size());
  for (std::size_t i = 0; i < back.steps.size(); ++i) {
    EXPECT_EQ(back.steps[i].config.kind, out.trace.steps[i].config.kind);
    EXPECT_EQ(back.steps[i].config.vertex, out.trace.steps[i].config.vertex);
    EXPECT_EQ(back.steps[i].removed_rotation, out.trace.steps[i].removed_rotation);
    EXPECT_EQ(back.steps[i].added_edges, out.trace.steps[i].added_edges);
  }
  EXPECT_EQ(back.base, out.trace.base);
  EXPECT_EQ(replay(back), g);
  EXPECT_EQ(io::dump(io::trace_to_json(back)), text);
}

TEST(TraceJson, UnknownCase) {
  auto j = io::parse_text(R"({"case": "Interior7", "vertex": 0, "rotation": [], "added_edges": []})");
  EXPECT_EQ(code_of([&] { io::step_from_json(j); }), Errc::ParseError);
}

TEST(Specs, RoundTripAndManifest) {
  GeneratorSpec spec{Family::RandomNT, 60, 6, 200, 42};
  auto back = io::spec_from_json(io::spec_to_json(spec));
  EXPECT_EQ(back.family, spec.family);
  EXPECT_EQ(back.n, 60);
  EXPECT_EQ(back.t, 6);
  EXPECT_EQ(back.flips, 200);
  EXPECT_EQ(back.seed, 42u);
  auto a = io::manifest_entry(spec, generate(spec));
  auto b = io::manifest_entry(spec, generate(spec));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.at("digest").get<std::string>().size(), 16u);
  EXPECT_EQ(io::new_manifest().at("rng"), kRngAlgorithm);
}

TEST(Digest, Fnv1aKnownValues) {
  EXPECT_EQ(io::digest(""), "cbf29ce484222325");
  EXPECT_EQ(io::digest("a"), "af63dc4c8601ec8c");
}

TEST(Dot, ListsEdgesAndColours) {
  auto g = wheel(3);
  Coloring phi({1, 2, 3, 4});
  auto dot = io::to_dot(g, &phi);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("// outer face: 1 2 3"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(dot.find("2 [label=\"2:3\"]"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 1)) ++edges;
  EXPECT_EQ(edges, 6u);
}

}  // namespace
}  // namespace ntdyn
