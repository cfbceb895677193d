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

#include "ntdyn/reducer.hpp"

#include <gtest/gtest.h>

#include "ntdyn/generators.hpp"
#include "test_support.hpp"

namespace ntdyn {
namespace {

using testing::code_of;

/// K4 with 4, 5, 6 stacked repeatedly into faces on the edge 1-2, so that
/// vertex 0 keeps degree 3 on the outer triangle.
PlanarEmbedding k4_with_stack_on_12() {
  PlanarEmbedding g = testing::k4();
  g = insert_vertex(g, 4, std::vector<VertexId>{1, 2, 3}, false);
  g = insert_vertex(g, 5, std::vector<VertexId>{1, 2, 4}, false);
  g = insert_vertex(g, 6, std::vector<VertexId>{1, 2, 5}, false);
  return g;
}

/// Wheel with the rim chords listed added through the outer face.
PlanarEmbedding wheel_with_outer_chords(int n, const std::vector<Edge>& chords) {
  PlanarEmbedding g = wheel(n);
  for (auto [a, b] : chords) g = add_edge_in_face(g, a, b, outer_face_of(g));
  return g;
}

TEST(FindReducible, FanEndpointIsBoundaryDeg2) {
  auto cfg = find_reducible(fan(7));
  EXPECT_EQ(cfg.kind, ReductionCase::BoundaryDeg2);
  EXPECT_EQ(cfg.vertex, 0);
  EXPECT_EQ(cfg.neighbors_ccw, (std::vector<VertexId>{1, 7}));
}

TEST(FindReducible, W7RimIsBoundaryDeg3NoChord) {
  auto cfg = find_reducible(wheel(7));
  EXPECT_EQ(cfg.kind, ReductionCase::BoundaryDeg3NoChord);
  EXPECT_EQ(cfg.vertex, 1);
  // u1 is the successor on the outer cycle, u3 the predecessor.
  EXPECT_EQ(cfg.neighbors_ccw, (std::vector<VertexId>{2, 0, 7}));
}

TEST(FindReducible, TripleStackedK4IsInteriorDeg3) {
  auto g = testing::triple_stacked_k4();
  ASSERT_EQ(g.vertex_count(), 7);
  auto cfg = find_reducible(g);
  EXPECT_EQ(cfg.kind, ReductionCase::InteriorDeg3);
  EXPECT_EQ(cfg.vertex, 4);
}

TEST(FindReducible, OuterTriangleCornerIsBoundaryDeg3Chord) {
  auto g = k4_with_stack_on_12();
  auto cfg = find_reducible(g);
  EXPECT_EQ(cfg.kind, ReductionCase::BoundaryDeg3Chord);
  EXPECT_EQ(cfg.vertex, 0);
  EXPECT_EQ(cfg.neighbors_ccw, (std::vector<VertexId>{1, 3, 2}));
}

TEST(FindReducible, RandomNearTriangulation) {
  auto g = random_near_triangulation(6, 60, 200, 42);
  auto cfg = find_reducible(g);
  EXPECT_TRUE(g.contains(cfg.vertex));
  if (is_boundary_case(cfg.kind)) {
    EXPECT_LE(g.degree(cfg.vertex), 3);
  } else {
    EXPECT_LE(g.degree(cfg.vertex), 5);
  }
}

TEST(FindReducible, Preconditions) {
  EXPECT_EQ(code_of([] { find_reducible(testing::cycle(8)); }), Errc::NotNearTriangulation);
  EXPECT_EQ(code_of([] { find_reducible(wheel(5)); }), Errc::InvalidParameter);
}

TEST(ApplyReduction, FanEndpoint) {
  auto g = fan(7);
  auto [next, step] = apply_reduction(g, find_reducible(g));
  EXPECT_TRUE(step.added_edges.empty());
  EXPECT_EQ(next.vertex_count(), 7);
  EXPECT_EQ(boundary_stats(next), (BoundaryStats{7, 0, 11}));
}

TEST(ApplyReduction, BoundaryDeg3NoChordClosesOuterFace) {
  auto g = wheel(7);
  auto [next, step] = apply_reduction(g, find_reducible(g));
  EXPECT_EQ(step.added_edges, (std::vector<Edge>{{2, 7}}));
  EXPECT_TRUE(next.has_edge(2, 7));
  EXPECT_EQ(boundary_stats(next), (BoundaryStats{6, 1, 12}));
}

TEST(ApplyReduction, SquareHoleAvoidsExistingDiagonal) {
  // Rim chord 1-3 of W_4 exists outside, so the hub's hole gets 2-4.
  auto g = wheel_with_outer_chords(4, {{1, 3}});
  ASSERT_TRUE(is_near_triangulation(g));
  ReducibleConfig cfg{ReductionCase::InteriorDeg4, 0, {1, 2, 3, 4}};
  auto [next, step] = apply_reduction(g, cfg);
  EXPECT_EQ(step.added_edges, (std::vector<Edge>{{2, 4}}));
  EXPECT_TRUE(is_near_triangulation(next));
}

TEST(ApplyReduction, PentagonHoleWithTwoChordsUsesFanAtSecondVertex) {
  auto g = wheel_with_outer_chords(5, {{1, 3}, {3, 5}});
  ASSERT_TRUE(is_near_triangulation(g));
  ReducibleConfig cfg{ReductionCase::InteriorDeg5, 0, {1, 2, 3, 4, 5}};
  auto [next, step] = apply_reduction(g, cfg);
  EXPECT_EQ(step.added_edges, (std::vector<Edge>{{2, 4}, {2, 5}}));
  EXPECT_TRUE(is_near_triangulation(next));
  EXPECT_EQ(undo_reduction(next, step), g);
}

TEST(HoleTriangulations, CatalanCounts) {
  std::vector<VertexId> square{4, 9, 2, 7};
  std::vector<VertexId> pentagon{1, 2, 3, 4, 5};
  EXPECT_EQ(hole_triangulations(square).size(), 4u);  // each diagonal twice
  auto pent = hole_triangulations(pentagon);
  ASSERT_EQ(pent.size(), 5u);
  std::set<std::set<Edge>> distinct;
  for (const auto& t : pent) {
    std::set<Edge> norm;
    for (auto [a, b] : t) norm.insert({std::min(a, b), std::max(a, b)});
    distinct.insert(norm);
  }
  EXPECT_EQ(distinct.size(), 5u);
}

TEST(ExtendColoring, InteriorDeg3TakesSmallestFreeColour) {
  auto g = testing::triple_stacked_k4();
  auto lists = ListAssignment::uniform(g.id_bound(), 6);
  auto [reduced, step] = apply_reduction(g, find_reducible(g));
  auto base = solve_list_r_dynamic(reduced, lists, 3);
  ASSERT_TRUE(base.coloring);
  Coloring phi = *base.coloring;
  phi.colors.resize(g.id_bound(), kUncolored);
  auto ext = extend_coloring(g, step, phi, lists, 3);
  for (VertexId u : step.removed_rotation) EXPECT_NE(ext.chosen, phi[u]);
  Coloring partial = phi;
  partial.set(step.config.vertex, kUncolored);
  EXPECT_EQ(ext.chosen, valid_extensions(g, partial, step.config.vertex, lists, 3).front());
  EXPECT_LE(ext.forbidden, 5);
  EXPECT_TRUE(is_r_dynamic(g, ext.coloring, 3));
}

TEST(ExtendColoring, BoundaryDeg2AvoidsCommonNeighbour) {
  // fan(3): vertex 0 has neighbours 1 and 3, both of degree 3, whose other
  // common neighbour is 2. Colour 2 would leave vertex 1 seeing {3, 2}.
  auto g = fan(3);
  ReducibleConfig cfg{ReductionCase::BoundaryDeg2, 0, {1, 3}};
  auto [reduced, step] = apply_reduction(g, cfg);
  Coloring phi({0, 1, 2, 3});
  auto ext = extend_coloring(g, step, phi, ListAssignment::uniform(4, 6), 3);
  EXPECT_EQ(ext.chosen, 4);
  EXPECT_EQ(ext.forbidden, 3);
  EXPECT_TRUE(is_r_dynamic(g, ext.coloring, 3));
}

TEST(ExtendColoring, FailsWhenEveryColourExcluded) {
  auto g = fan(3);
  ReducibleConfig cfg{ReductionCase::BoundaryDeg2, 0, {1, 3}};
  auto [reduced, step] = apply_reduction(g, cfg);
  std::vector<std::vector<Color>> lists{{1, 2, 3}, {1}, {2}, {3}};
  EXPECT_EQ(code_of([&] { extend_coloring(g, step, Coloring({0, 1, 2, 3}), ListAssignment(lists), 3); }),
            Errc::ExtensionFailed);
}

TEST(ColorNearTriangulation, W5UsesSixColours) {
  auto g = wheel(5);
  auto out = color_near_triangulation(g, ListAssignment::uniform(6, 6));
  EXPECT_TRUE(is_r_dynamic(g, out.coloring, 3));
  EXPECT_EQ(distinct_colors_used(g, out.coloring), 6);
  EXPECT_TRUE(out.trace.steps.empty());
}

TEST(ColorNearTriangulation, W5WithFiveColoursFailsInExploreMode) {
  auto g = wheel(5);
  EngineOptions opts;
  opts.explore = true;
  EXPECT_EQ(code_of([&] { color_near_triangulation(g, ListAssignment::uniform(6, 5), opts); }),
            Errc::ColoringFailed);
  EXPECT_EQ(code_of([&] { color_near_triangulation(g, ListAssignment::uniform(6, 5)); }), Errc::ListTooSmall);
}

TEST(ColorNearTriangulation, RejectsNonNearTriangulation) {
  EXPECT_EQ(code_of([] { color_near_triangulation(testing::cycle(7), ListAssignment::uniform(7, 6)); }),
            Errc::NotNearTriangulation);
}

TEST(ColorNearTriangulation, W7Pipeline) {
  auto g = wheel(7);
  auto lists = ListAssignment::uniform(8, 6);
  auto out = color_near_triangulation(g, lists);
  EXPECT_TRUE(is_proper(g, out.coloring));
  EXPECT_TRUE(is_r_dynamic(g, out.coloring, 3));
  EXPECT_TRUE(respects_lists(out.coloring, lists));
  EXPECT_EQ(out.trace.steps.size(), 2u);
  EXPECT_EQ(replay(out.trace), g);
}

TEST(ColorNearTriangulation, StackedFiftyRandomLists) {
  auto g = stacked(3, 50, 17);
  auto lists = random_lists(g, 6, 40, 17);
  EngineOptions opts;
  opts.check_invariants = true;
  auto out = color_near_triangulation(g, lists, opts);
  EXPECT_FALSE(find_violation(g, out.coloring, 3, &lists));
  EXPECT_LE(out.stats.max_forbidden, 5);
  EXPECT_EQ(out.stats.steps, 44);
  EXPECT_EQ(replay(out.trace), g);
}

TEST(ColorNearTriangulation, ClosureAndReplayOnRandomCorpus) {
  SeededRng rng(404);
  for (int i = 0; i < 200; ++i) {
    auto spec = random_spec(rng, 3, 10, 7, 50, 3);
    auto g = generate(spec);
    auto lists = random_lists(g, 6, 40, rng.next());
    EngineOptions opts;
    opts.check_invariants = true;
    auto out = color_near_triangulation(g, lists, opts);
    EXPECT_FALSE(find_violation(g, out.coloring, 3, &lists));
    EXPECT_EQ(out.trace.base.vertex_count(), std::min(6, g.vertex_count()));
    EXPECT_EQ(replay(out.trace), g) << "spec seed " << spec.seed;
    // Termination: one vertex per step.
    EXPECT_EQ(out.stats.steps, g.vertex_count() - out.trace.base.vertex_count());
  }
}

}  // namespace
}  // namespace ntdyn
