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

/**
 * @file
 * Reducible configurations of near-triangulations and the colouring engine
 * built on them.
 *
 * A near-triangulation on at least seven vertices always has a boundary
 * vertex of degree at most 3 or an interior vertex of degree at most 5:
 * otherwise 2e >= 4t + 6k, while every near-triangulation has
 * e = 2t + 3k - 3. Each such vertex is removed (patching the hole or the
 * outer face back to a near-triangulation), the smaller graph is coloured,
 * and the removed vertex is given the smallest colour of its list that keeps
 * the colouring proper and r-dynamic. With lists of size 6 at most five
 * colours are ever excluded at that point.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntdyn/coloring.hpp"
#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"
#include "ntdyn/oracle.hpp"

namespace ntdyn {

enum class ReductionCase {
  BoundaryDeg2,
  BoundaryDeg3Chord,
  BoundaryDeg3NoChord,
  InteriorDeg3,
  InteriorDeg4,
  InteriorDeg5,
};

inline constexpr std::array<ReductionCase, 6> kAllReductionCases = {
    ReductionCase::BoundaryDeg2, ReductionCase::BoundaryDeg3Chord, ReductionCase::BoundaryDeg3NoChord,
    ReductionCase::InteriorDeg3, ReductionCase::InteriorDeg4,      ReductionCase::InteriorDeg5,
};

constexpr std::string_view to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::BoundaryDeg2: return "BoundaryDeg2";
    case ReductionCase::BoundaryDeg3Chord: return "BoundaryDeg3Chord";
    case ReductionCase::BoundaryDeg3NoChord: return "BoundaryDeg3NoChord";
    case ReductionCase::InteriorDeg3: return "InteriorDeg3";
    case ReductionCase::InteriorDeg4: return "InteriorDeg4";
    case ReductionCase::InteriorDeg5: return "InteriorDeg5";
  }
  return "Unknown";
}

inline std::optional<ReductionCase> parse_reduction_case(std::string_view s) {
  for (ReductionCase c : kAllReductionCases) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

constexpr bool is_boundary_case(ReductionCase c) {
  return c == ReductionCase::BoundaryDeg2 || c == ReductionCase::BoundaryDeg3Chord ||
         c == ReductionCase::BoundaryDeg3NoChord;
}

struct ReducibleConfig {
  ReductionCase kind = ReductionCase::BoundaryDeg2;
  VertexId vertex = -1;
  /// Counter-clockwise neighbours; for boundary cases u1 is the successor
  /// of the vertex on the outer cycle and the last entry its predecessor.
  std::vector<VertexId> neighbors_ccw;

  friend bool operator==(const ReducibleConfig&, const ReducibleConfig&) = default;
};

struct ReductionStep {
  ReducibleConfig config;
  std::vector<VertexId> removed_rotation;
  std::vector<Edge> added_edges;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Steps in the order they were applied, and the graph they end at.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  PlanarEmbedding base;
};

inline constexpr int kBaseCaseSize = 6;
inline constexpr int kRequiredListSize = 6;

namespace detail {

inline std::vector<VertexId> rotated_to(std::span<const VertexId> rot, VertexId first) {
  std::vector<VertexId> out(rot.begin(), rot.end());
  auto it = std::find(out.begin(), out.end(), first);
  std::rotate(out.begin(), it, out.end());
  return out;
}

}  // namespace detail

/// Boundary vertices of degree <= 3 come first, then interior vertices of
/// degree 3, then interior vertices of degree 4 or 5; smallest id wins
/// within each group.
inline ReducibleConfig find_reducible(const PlanarEmbedding& emb) {
  if (!is_near_triangulation(emb)) throw Error(Errc::NotNearTriangulation, "find_reducible");
  if (emb.vertex_count() <= kBaseCaseSize) {
    throw Error(Errc::InvalidParameter, "find_reducible needs at least 7 vertices");
  }
  const auto& outer = emb.outer_face();
  std::vector<char> boundary(emb.id_bound(), 0);
  for (VertexId v : outer) boundary[v] = 1;

  std::optional<std::size_t> best_pos;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (emb.degree(outer[i]) <= 3 && (!best_pos || outer[i] < outer[*best_pos])) best_pos = i;
  }
  if (best_pos) {
    const VertexId v = outer[*best_pos];
    const VertexId succ = outer[(*best_pos + 1) % outer.size()];
    ReducibleConfig cfg;
    cfg.vertex = v;
    cfg.neighbors_ccw = detail::rotated_to(emb.rotation(v), succ);
    if (emb.degree(v) == 2) {
      cfg.kind = ReductionCase::BoundaryDeg2;
    } else {
      cfg.kind = emb.has_edge(cfg.neighbors_ccw[0], cfg.neighbors_ccw[2]) ? ReductionCase::BoundaryDeg3Chord
                                                                          : ReductionCase::BoundaryDeg3NoChord;
    }
    return cfg;
  }
  for (int max_degree : {3, 5}) {
    for (VertexId v : emb.vertices()) {
      if (boundary[v] || emb.degree(v) > max_degree) continue;
      ReducibleConfig cfg;
      cfg.vertex = v;
      cfg.neighbors_ccw = neighbors_ccw(emb, v);
      switch (emb.degree(v)) {
        case 3: cfg.kind = ReductionCase::InteriorDeg3; break;
        case 4: cfg.kind = ReductionCase::InteriorDeg4; break;
        case 5: cfg.kind = ReductionCase::InteriorDeg5; break;
        default:
          throw Error(Errc::NoReducibleVertex, "interior vertex " + std::to_string(v) + " of degree " +
                                                   std::to_string(emb.degree(v)));
      }
      return cfg;
    }
  }
  throw Error(Errc::NoReducibleVertex, "all boundary degrees >= 4 and interior degrees >= 6");
}

/// Triangulations of a hole polygon, as chord lists, in canonical order:
/// fans from each hole vertex, apices in ascending vertex id.
inline std::vector<std::vector<Edge>> hole_triangulations(std::span<const VertexId> hole) {
  const std::size_t s = hole.size();
  std::vector<std::size_t> order(s);
  for (std::size_t i = 0; i < s; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return hole[a] < hole[b]; });
  std::vector<std::vector<Edge>> out;
  for (std::size_t p : order) {
    std::vector<Edge> chords;
    for (std::size_t q = 2; q + 1 < s; ++q) chords.emplace_back(hole[p], hole[(p + q) % s]);
    out.push_back(std::move(chords));
  }
  return out;
}

/// Removes the configured vertex and restores a near-triangulation.
inline std::pair<PlanarEmbedding, ReductionStep> apply_reduction(const PlanarEmbedding& emb,
                                                                 const ReducibleConfig& config) {
  const VertexId v = config.vertex;
  if (!emb.contains(v) || !detail::cyclic_equal(config.neighbors_ccw, emb.rotation(v))) {
    throw Error(Errc::InvalidParameter, "configuration does not match the embedding");
  }
  ReductionStep step;
  step.config = config;
  step.removed_rotation = config.neighbors_ccw;
  PlanarEmbedding next = remove_vertex(emb, v);
  const auto& u = config.neighbors_ccw;

  switch (config.kind) {
    case ReductionCase::BoundaryDeg2:
    case ReductionCase::BoundaryDeg3Chord:
    case ReductionCase::InteriorDeg3:
      break;
    case ReductionCase::BoundaryDeg3NoChord:
      // The outer boundary now runs u3, u2, u1; closing u3u1 leaves the
      // triangle u1u2u3 bounded.
      next = add_edge_in_face(next, u[2], u[0], outer_face_of(next));
      step.added_edges.emplace_back(u[0], u[2]);
      break;
    case ReductionCase::InteriorDeg4:
    case ReductionCase::InteriorDeg5: {
      bool done = false;
      for (const auto& chords : hole_triangulations(u)) {
        bool absent = true;
        for (auto [a, b] : chords) absent = absent && !next.has_edge(a, b);
        if (!absent) continue;
        std::vector<VertexId> face(u.begin(), u.end());
        for (auto [a, b] : chords) {
          next = add_edge_in_face(next, a, b, Face{face, false});
          // Continue in the piece that still holds the apex's later chord.
          face = split_walk(face, a, b).second;
          step.added_edges.emplace_back(a, b);
        }
        done = true;
        break;
      }
      if (!done) {
        throw Error(Errc::HoleTriangulationFailed, "every triangulation of the hole around " +
                                                       std::to_string(v) + " reuses an existing edge");
      }
      break;
    }
  }
  return {std::move(next), std::move(step)};
}

/// Replays one step backwards: drops the added edges and puts the vertex
/// back with its old rotation.
inline PlanarEmbedding undo_reduction(const PlanarEmbedding& reduced, const ReductionStep& step) {
  PlanarEmbedding g = reduced;
  for (auto it = step.added_edges.rbegin(); it != step.added_edges.rend(); ++it) {
    g = remove_edge(g, it->first, it->second);
  }
  return insert_vertex(g, step.config.vertex, step.removed_rotation, is_boundary_case(step.config.kind));
}

/// Rebuilds the original graph from the base of a trace.
inline PlanarEmbedding replay(const ReductionTrace& trace) {
  PlanarEmbedding g = trace.base;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) g = undo_reduction(g, *it);
  return g;
}

struct Extension {
  Coloring coloring;
  Color chosen = kUncolored;
  /// |L(v)| minus the number of valid colours.
  int forbidden = 0;
};

/// Colours the removed vertex of `step`, given a colouring of the reduced
/// graph. `emb` is the graph before the reduction.
inline Extension extend_coloring(const PlanarEmbedding& emb, const ReductionStep& step, const Coloring& reduced,
                                 const ListAssignment& lists, int r = 3) {
  const VertexId v = step.config.vertex;
  Coloring partial = reduced;
  partial.set(v, kUncolored);
  auto valid = valid_extensions(emb, partial, v, lists, r);
  const int forbidden = static_cast<int>(lists[v].size()) - static_cast<int>(valid.size());
  if (valid.empty()) {
    throw Error(Errc::ExtensionFailed, std::string(to_string(step.config.kind)) + " at vertex " +
                                           std::to_string(v) + ": all " + std::to_string(lists[v].size()) +
                                           " colours excluded");
  }
  partial.set(v, valid.front());
  return Extension{std::move(partial), valid.front(), forbidden};
}

struct EngineOptions {
  int r = 3;
  /// Allows lists smaller than 6; failures are then reported, not bugs.
  bool explore = false;
  /// Re-checks closure and the edge formula on every intermediate graph.
  bool check_invariants = false;
  SearchBudget base_budget{};
};

struct EngineStats {
  std::array<int, 6> case_counts{};
  /// forbidden_histogram[f] = number of extensions with f excluded colours.
  std::vector<int> forbidden_histogram;
  int max_forbidden = 0;
  int steps = 0;

  int count(ReductionCase c) const { return case_counts[static_cast<std::size_t>(c)]; }
};

struct ColoringOutcome {
  Coloring coloring;
  ReductionTrace trace;
  EngineStats stats;
};

namespace detail {

inline void check_intermediate(const PlanarEmbedding& g) {
  if (!is_near_triangulation(g)) {
    throw Error(Errc::InvariantViolated, "intermediate graph is not a near-triangulation");
  }
  auto s = boundary_stats(g);
  if (s.e != 2 * s.t + 3 * s.k - 3) {
    throw Error(Errc::InvariantViolated, "edge count " + std::to_string(s.e) + " != 2t + 3k - 3");
  }
}

}  // namespace detail

/// Reduces to at most six vertices, colours the base with pairwise-distinct
/// colours and extends back. The result is verified before it is returned.
inline ColoringOutcome color_near_triangulation(const PlanarEmbedding& emb, const ListAssignment& lists,
                                                const EngineOptions& options = {}) {
  if (!is_near_triangulation(emb)) throw Error(Errc::NotNearTriangulation, "color_near_triangulation");
  if (!options.explore && lists.min_size(emb) < kRequiredListSize) {
    throw Error(Errc::ListTooSmall, "lists of size >= 6 are required outside exploration mode");
  }
  for (VertexId v : emb.vertices()) {
    if (v >= lists.id_bound() || lists[v].empty()) {
      throw Error(Errc::InvalidParameter, "vertex " + std::to_string(v) + " has no list");
    }
  }
  ColoringOutcome out;
  std::vector<PlanarEmbedding> levels{emb};
  if (options.check_invariants) detail::check_intermediate(emb);
  while (levels.back().vertex_count() > kBaseCaseSize) {
    auto config = find_reducible(levels.back());
    auto [next, step] = apply_reduction(levels.back(), config);
    if (options.check_invariants) detail::check_intermediate(next);
    ++out.stats.case_counts[static_cast<std::size_t>(config.kind)];
    out.trace.steps.push_back(std::move(step));
    levels.push_back(std::move(next));
  }
  out.trace.base = levels.back();
  out.stats.steps = static_cast<int>(out.trace.steps.size());

  Coloring phi;
  if (lists.min_size(out.trace.base) >= out.trace.base.vertex_count()) {
    phi = rainbow_greedy(out.trace.base, lists);
  } else {
    auto res = solve_list_r_dynamic(out.trace.base, lists, options.r, options.base_budget);
    if (!res.coloring) throw Error(Errc::ColoringFailed, "base graph has no colouring from its lists");
    phi = std::move(*res.coloring);
  }
  phi.colors.resize(emb.id_bound(), kUncolored);

  for (std::size_t i = out.trace.steps.size(); i-- > 0;) {
    Extension ext;
    try {
      ext = extend_coloring(levels[i], out.trace.steps[i], phi, lists, options.r);
    } catch (const Error& e) {
      if (e.code() == Errc::ExtensionFailed) throw Error(Errc::ColoringFailed, e.what());
      throw;
    }
    phi = std::move(ext.coloring);
    if (static_cast<int>(out.stats.forbidden_histogram.size()) <= ext.forbidden) {
      out.stats.forbidden_histogram.resize(ext.forbidden + 1, 0);
    }
    ++out.stats.forbidden_histogram[ext.forbidden];
    out.stats.max_forbidden = std::max(out.stats.max_forbidden, ext.forbidden);
  }

  if (auto bad = find_violation(emb, phi, options.r, &lists)) {
    throw Error(Errc::ColoringFailed, "engine produced an invalid colouring: " + bad->message);
  }
  out.coloring = std::move(phi);
  return out;
}

}  // namespace ntdyn
