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
 * Combinatorial plane graphs given by a rotation system.
 *
 * Every vertex stores its neighbours in counter-clockwise order. Faces are
 * traced with the face on the left: arriving at v from u, the walk continues
 * to the neighbour that precedes u in the rotation of v. Bounded faces are
 * therefore walked counter-clockwise and the outer face clockwise. The outer
 * face is stored explicitly as the counter-clockwise boundary cycle, i.e. the
 * reverse of its traced walk.
 *
 * Vertex ids are stable: removing a vertex leaves a tombstone so that
 * reduction traces can refer to the original ids.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ntdyn/error.hpp"

namespace ntdyn {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

struct Face {
  /// Bounded faces: the counter-clockwise face walk. Outer face: the
  /// counter-clockwise boundary cycle of the graph.
  std::vector<VertexId> boundary;
  bool is_outer = false;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Quantities t, k and e of a near-triangulation.
struct BoundaryStats {
  int t = 0;
  int k = 0;
  int e = 0;

  friend bool operator==(const BoundaryStats&, const BoundaryStats&) = default;
};

class PlanarEmbedding;
void validate(const PlanarEmbedding& emb);

namespace detail {

inline std::size_t index_of(std::span<const VertexId> seq, VertexId x) {
  auto it = std::find(seq.begin(), seq.end(), x);
  return it == seq.end() ? seq.size() : static_cast<std::size_t>(it - seq.begin());
}

inline VertexId cyclic_prev(std::span<const VertexId> seq, std::size_t i) {
  return seq[(i + seq.size() - 1) % seq.size()];
}

inline VertexId cyclic_next(std::span<const VertexId> seq, std::size_t i) {
  return seq[(i + 1) % seq.size()];
}

/// Rotates `seq` so that it starts at its smallest element.
inline std::vector<VertexId> min_rotation(std::vector<VertexId> seq) {
  if (!seq.empty()) {
    std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()), seq.end());
  }
  return seq;
}

/// Equality of two sequences read as cycles.
inline bool cyclic_equal(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    if (b[shift] != a[0]) continue;
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) {
      same = a[i] == b[(shift + i) % b.size()];
    }
    if (same) return true;
  }
  return false;
}

}  // namespace detail

class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  /// Builds and validates an embedding on vertices 0..rotation.size()-1.
  PlanarEmbedding(std::vector<std::vector<VertexId>> rotation, std::vector<VertexId> outer_face)
      : PlanarEmbedding(std::move(rotation), std::vector<bool>(), std::move(outer_face), Unchecked{}) {
    validate(*this);
  }

  /// Number of ids ever allocated, including tombstones.
  int id_bound() const { return static_cast<int>(rotation_.size()); }
  int vertex_count() const { return live_; }
  int edge_count() const { return edges_; }

  bool contains(VertexId v) const { return v >= 0 && v < id_bound() && alive_[v]; }

  std::span<const VertexId> rotation(VertexId v) const { return rotation_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(rotation_.at(v).size()); }
  const std::vector<VertexId>& outer_face() const { return outer_; }

  bool has_edge(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& ru = rotation_[u];
    const auto& rv = rotation_[v];
    return ru.size() <= rv.size() ? std::find(ru.begin(), ru.end(), v) != ru.end()
                                  : std::find(rv.begin(), rv.end(), u) != rv.end();
  }

  bool on_outer_face(VertexId v) const {
    return std::find(outer_.begin(), outer_.end(), v) != outer_.end();
  }

  /// Live vertex ids in ascending order.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_);
    for (VertexId v = 0; v < id_bound(); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

  /// Edges as (smaller, larger) pairs in ascending order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (VertexId u = 0; u < id_bound(); ++u) {
      for (VertexId v : rotation_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Same live vertices, same rotations and outer cycle up to cyclic shift.
  friend bool operator==(const PlanarEmbedding& a, const PlanarEmbedding& b) {
    if (a.alive_ != b.alive_ || a.id_bound() != b.id_bound()) return false;
    for (VertexId v = 0; v < a.id_bound(); ++v) {
      if (!detail::cyclic_equal(a.rotation_[v], b.rotation_[v])) return false;
    }
    return detail::cyclic_equal(a.outer_, b.outer_);
  }

 private:
  struct Unchecked {};

  PlanarEmbedding(std::vector<std::vector<VertexId>> rotation, std::vector<bool> alive,
                  std::vector<VertexId> outer_face, Unchecked)
      : rotation_(std::move(rotation)), alive_(std::move(alive)), outer_(std::move(outer_face)) {
    if (alive_.empty()) alive_.assign(rotation_.size(), true);
    if (alive_.size() != rotation_.size()) {
      throw Error(Errc::MalformedEmbedding, "alive mask size mismatch");
    }
    std::size_t half_edges = 0;
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
      if (alive_[v]) ++live_;
      half_edges += rotation_[v].size();
    }
    edges_ = static_cast<int>(half_edges / 2);
  }

  std::vector<std::vector<VertexId>> rotation_;
  std::vector<bool> alive_;
  std::vector<VertexId> outer_;
  int edges_ = 0;
  int live_ = 0;

  friend class EmbeddingEditor;
};

/// Mutable scratch copy used by the value-returning operations below. Keeps
/// the invariants of PlanarEmbedding out of the way while an edit is half done.
class EmbeddingEditor {
 public:
  explicit EmbeddingEditor(const PlanarEmbedding& emb)
      : rotation_(emb.rotation_), alive_(emb.alive_), outer_(emb.outer_) {}

  std::vector<VertexId>& rotation(VertexId v) { return rotation_.at(v); }
  std::vector<VertexId>& outer() { return outer_; }

  void kill(VertexId v) {
    alive_.at(v) = false;
    rotation_[v].clear();
  }

  void revive(VertexId v) {
    if (v >= static_cast<VertexId>(rotation_.size())) {
      rotation_.resize(v + 1);
      alive_.resize(v + 1, false);
    }
    alive_[v] = true;
  }

  /// Inserts `x` into the rotation of `at` immediately before `anchor`.
  void insert_before(VertexId at, VertexId anchor, VertexId x) {
    auto& rot = rotation_.at(at);
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw Error(Errc::MalformedEmbedding, "rotation anchor missing");
    rot.insert(it, x);
  }

  /// Inserts `x` into the rotation of `at` immediately after `anchor`.
  void insert_after(VertexId at, VertexId anchor, VertexId x) {
    auto& rot = rotation_.at(at);
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw Error(Errc::MalformedEmbedding, "rotation anchor missing");
    rot.insert(it + 1, x);
  }

  void erase(VertexId at, VertexId x) {
    auto& rot = rotation_.at(at);
    rot.erase(std::remove(rot.begin(), rot.end(), x), rot.end());
  }

  PlanarEmbedding build() && {
    return PlanarEmbedding(std::move(rotation_), std::move(alive_), std::move(outer_),
                           PlanarEmbedding::Unchecked{});
  }

  /// Builds and runs full validation; used where construction is not
  /// planar by design (e.g. arbitrary documents).
  PlanarEmbedding build_checked() && {
    auto emb = std::move(*this).build();
    validate(emb);
    return emb;
  }

 private:
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<bool> alive_;
  std::vector<VertexId> outer_;
};

// ---------------------------------------------------------------------------
// Face tracing
// ---------------------------------------------------------------------------

/// The vertex that follows `b` on the face walk that traverses a -> b.
inline VertexId face_successor(const PlanarEmbedding& emb, VertexId a, VertexId b) {
  auto rot = emb.rotation(b);
  std::size_t i = detail::index_of(rot, a);
  if (i == rot.size()) throw Error(Errc::MalformedEmbedding, "rotation is not symmetric");
  return detail::cyclic_prev(rot, i);
}

/// Traces the face whose walk contains the directed edge a -> b.
inline std::vector<VertexId> walk_face(const PlanarEmbedding& emb, VertexId a, VertexId b) {
  std::vector<VertexId> walk;
  VertexId u = a;
  VertexId v = b;
  const std::size_t limit = 2 * static_cast<std::size_t>(emb.edge_count()) + 1;
  do {
    walk.push_back(u);
    VertexId w = face_successor(emb, u, v);
    u = v;
    v = w;
    if (walk.size() > limit) throw Error(Errc::MalformedEmbedding, "face walk does not close");
  } while (u != a || v != b);
  return walk;
}

namespace detail {

inline void check_structure(const PlanarEmbedding& emb) {
  for (VertexId v = 0; v < emb.id_bound(); ++v) {
    auto rot = emb.rotation(v);
    if (!emb.contains(v)) {
      if (!rot.empty()) throw Error(Errc::MalformedEmbedding, "removed vertex has neighbours");
      continue;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      VertexId u = rot[i];
      if (!emb.contains(u)) {
        throw Error(Errc::MalformedEmbedding,
                    "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(u));
      }
      if (u == v) throw Error(Errc::MalformedEmbedding, "self-loop at " + std::to_string(v));
      if (std::find(rot.begin() + i + 1, rot.end(), u) != rot.end()) {
        throw Error(Errc::MalformedEmbedding, "parallel edge " + std::to_string(v) + "-" + std::to_string(u));
      }
      auto back = emb.rotation(u);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(Errc::MalformedEmbedding,
                    "rotation not symmetric at " + std::to_string(v) + "-" + std::to_string(u));
      }
    }
  }
}

inline bool is_connected(const PlanarEmbedding& emb) {
  auto verts = emb.vertices();
  if (verts.empty()) return true;
  std::vector<char> seen(emb.id_bound(), 0);
  std::vector<VertexId> stack{verts.front()};
  seen[verts.front()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : emb.rotation(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == emb.vertex_count();
}

/// Face walks of a structurally sound embedding, in discovery order.
inline std::vector<std::vector<VertexId>> raw_walks(const PlanarEmbedding& emb) {
  std::vector<std::vector<VertexId>> walks;
  std::vector<std::vector<char>> used(emb.id_bound());
  for (VertexId v = 0; v < emb.id_bound(); ++v) used[v].assign(emb.rotation(v).size(), 0);
  for (VertexId a = 0; a < emb.id_bound(); ++a) {
    auto rot_a = emb.rotation(a);
    for (std::size_t i = 0; i < rot_a.size(); ++i) {
      if (used[a][i]) continue;
      auto walk = walk_face(emb, a, rot_a[i]);
      for (std::size_t j = 0; j < walk.size(); ++j) {
        VertexId x = walk[j];
        VertexId y = detail::cyclic_next(std::span<const VertexId>(walk), j);
        used[x][detail::index_of(emb.rotation(x), y)] = 1;
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

/// Directed edge (in walk direction) of the stored outer face, if any.
inline std::optional<Edge> outer_walk_edge(const PlanarEmbedding& emb) {
  const auto& outer = emb.outer_face();
  if (outer.size() < 2) return std::nullopt;
  return Edge{outer[1], outer[0]};
}

inline bool walk_contains(std::span<const VertexId> walk, VertexId a, VertexId b) {
  for (std::size_t j = 0; j < walk.size(); ++j) {
    if (walk[j] == a && cyclic_next(walk, j) == b) return true;
  }
  return false;
}

}  // namespace detail

/// Checks symmetry, simplicity, connectivity, Euler's formula and that the
/// stored outer face is a traced face. Throws MalformedEmbedding otherwise.
inline void validate(const PlanarEmbedding& emb) {
  detail::check_structure(emb);
  if (emb.vertex_count() == 0) {
    if (!emb.outer_face().empty()) throw Error(Errc::MalformedEmbedding, "empty graph with outer face");
    return;
  }
  if (!detail::is_connected(emb)) throw Error(Errc::MalformedEmbedding, "graph is not connected");
  const auto& outer = emb.outer_face();
  if (emb.edge_count() == 0) {
    if (outer.size() != 1 || !emb.contains(outer[0])) {
      throw Error(Errc::MalformedEmbedding, "single vertex needs outer face [v]");
    }
    return;
  }
  auto walks = detail::raw_walks(emb);
  const int euler = emb.vertex_count() - emb.edge_count() + static_cast<int>(walks.size());
  if (euler != 2) {
    throw Error(Errc::MalformedEmbedding,
                "Euler characteristic " + std::to_string(euler) + " (rotation system is not planar)");
  }
  if (outer.size() < 2) throw Error(Errc::MalformedEmbedding, "outer face too short");
  for (VertexId v : outer) {
    if (!emb.contains(v)) throw Error(Errc::MalformedEmbedding, "outer face lists unknown vertex");
  }
  auto [a, b] = *detail::outer_walk_edge(emb);
  if (!emb.has_edge(a, b)) throw Error(Errc::MalformedEmbedding, "outer face edge missing");
  auto walk = walk_face(emb, a, b);
  std::reverse(walk.begin(), walk.end());
  if (!detail::cyclic_equal(walk, outer)) {
    throw Error(Errc::MalformedEmbedding, "outer face is not a face of the rotation system");
  }
}

/// All faces; each directed edge lies on exactly one walk.
inline std::vector<Face> trace_faces(const PlanarEmbedding& emb) {
  std::vector<Face> faces;
  if (emb.vertex_count() == 0) return faces;
  if (emb.edge_count() == 0) {
    faces.push_back(Face{emb.outer_face(), true});
    return faces;
  }
  auto outer_edge = *detail::outer_walk_edge(emb);
  for (auto& walk : detail::raw_walks(emb)) {
    if (detail::walk_contains(walk, outer_edge.first, outer_edge.second)) {
      faces.push_back(Face{emb.outer_face(), true});
    } else {
      faces.push_back(Face{std::move(walk), false});
    }
  }
  return faces;
}

inline Face outer_face_of(const PlanarEmbedding& emb) { return Face{emb.outer_face(), true}; }

/// Every bounded face is a triangle and the outer boundary is a simple cycle.
inline bool is_near_triangulation(const PlanarEmbedding& emb) {
  if (emb.vertex_count() < 3) return false;
  const auto& outer = emb.outer_face();
  if (outer.size() < 3) return false;
  std::vector<VertexId> sorted(outer);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const auto& face : trace_faces(emb)) {
    if (!face.is_outer && face.boundary.size() != 3) return false;
  }
  return true;
}

inline BoundaryStats boundary_stats(const PlanarEmbedding& emb) {
  if (!is_near_triangulation(emb)) throw Error(Errc::NotNearTriangulation, "boundary_stats");
  BoundaryStats s;
  s.t = static_cast<int>(emb.outer_face().size());
  s.k = emb.vertex_count() - s.t;
  s.e = emb.edge_count();
  return s;
}

inline std::vector<VertexId> neighbors_ccw(const PlanarEmbedding& emb, VertexId v) {
  if (!emb.contains(v)) throw Error(Errc::InvalidParameter, "no vertex " + std::to_string(v));
  auto rot = emb.rotation(v);
  return {rot.begin(), rot.end()};
}

namespace detail {

/// Rotates a cycle to start at the first vertex of `previous` that it
/// contains, keeping the outer face listing stable across edits.
inline std::vector<VertexId> anchor_like(std::vector<VertexId> cycle, std::span<const VertexId> previous) {
  for (VertexId v : previous) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it != cycle.end()) {
      std::rotate(cycle.begin(), it, cycle.end());
      return cycle;
    }
  }
  return min_rotation(std::move(cycle));
}

/// Recomputes the outer face after edges incident to the edit were removed.
/// `fallback` is any directed edge of the merged face, used when no edge of
/// the old outer walk survived.
inline std::vector<VertexId> recompute_outer(const PlanarEmbedding& emb, std::span<const VertexId> old_outer,
                                             std::optional<Edge> fallback) {
  if (emb.vertex_count() == 0) return {};
  if (emb.edge_count() == 0) return {emb.vertices().front()};
  std::optional<Edge> seed;
  for (std::size_t i = 0; i < old_outer.size() && !seed; ++i) {
    VertexId a = cyclic_next(old_outer, i);
    VertexId b = old_outer[i];
    if (emb.has_edge(a, b)) seed = Edge{a, b};
  }
  if (!seed) seed = fallback;
  if (!seed) throw Error(Errc::MalformedEmbedding, "cannot locate outer face");
  auto walk = walk_face(emb, seed->first, seed->second);
  std::reverse(walk.begin(), walk.end());
  return anchor_like(std::move(walk), old_outer);
}

}  // namespace detail

/// Deletes `v` and its edges. If `v` was on the outer face, the faces around
/// it merge into the new outer face.
inline PlanarEmbedding remove_vertex(const PlanarEmbedding& emb, VertexId v) {
  if (!emb.contains(v)) throw Error(Errc::InvalidParameter, "no vertex " + std::to_string(v));
  EmbeddingEditor ed(emb);
  auto nbrs = neighbors_ccw(emb, v);
  for (VertexId u : nbrs) ed.erase(u, v);
  ed.kill(v);
  const bool was_outer = emb.on_outer_face(v);
  if (!was_outer) {
    auto out = std::move(ed).build();
    if (!detail::is_connected(out)) throw Error(Errc::DisconnectsGraph, "removing " + std::to_string(v));
    return out;
  }
  auto tmp = std::move(ed).build();
  if (!detail::is_connected(tmp)) throw Error(Errc::DisconnectsGraph, "removing " + std::to_string(v));
  // Old walk v -> u -> x continues as u -> x in the merged face.
  std::optional<Edge> fallback;
  for (VertexId u : nbrs) {
    VertexId x = face_successor(emb, v, u);
    if (x != v) {
      fallback = Edge{u, x};
      break;
    }
  }
  EmbeddingEditor fix(tmp);
  fix.outer() = detail::recompute_outer(tmp, emb.outer_face(), fallback);
  return std::move(fix).build();
}

/// Deletes the edge uw. A bridge cannot be removed.
inline PlanarEmbedding remove_edge(const PlanarEmbedding& emb, VertexId u, VertexId w) {
  if (!emb.has_edge(u, w)) throw Error(Errc::InvalidParameter, "no edge to remove");
  EmbeddingEditor ed(emb);
  ed.erase(u, w);
  ed.erase(w, u);
  auto tmp = std::move(ed).build();
  if (!detail::is_connected(tmp)) throw Error(Errc::DisconnectsGraph, "edge is a bridge");
  EmbeddingEditor fix(tmp);
  VertexId x = face_successor(emb, w, u);
  fix.outer() = detail::recompute_outer(tmp, emb.outer_face(),
                                        x != w ? Edge{u, x} : Edge{w, face_successor(emb, u, w)});
  return std::move(fix).build();
}

/// Splits a face walk at the first occurrences of u and w. The first piece
/// walks u..w, the second w..u; each closes with the new edge.
inline std::pair<std::vector<VertexId>, std::vector<VertexId>> split_walk(std::span<const VertexId> walk,
                                                                          VertexId u, VertexId w) {
  const std::size_t i = detail::index_of(walk, u);
  const std::size_t j = detail::index_of(walk, w);
  if (i == walk.size() || j == walk.size()) throw Error(Errc::VerticesNotOnFace, "split_walk");
  std::vector<VertexId> first;
  std::vector<VertexId> second;
  for (std::size_t p = i;; p = (p + 1) % walk.size()) {
    first.push_back(walk[p]);
    if (p == j) break;
  }
  for (std::size_t p = j;; p = (p + 1) % walk.size()) {
    second.push_back(walk[p]);
    if (p == i) break;
  }
  return {std::move(first), std::move(second)};
}

/// Adds the edge uw drawn inside `face`.
///
/// For the outer face the counter-clockwise boundary path from u to w
/// becomes a bounded face and the remainder stays outer.
inline PlanarEmbedding add_edge_in_face(const PlanarEmbedding& emb, VertexId u, VertexId w, const Face& face) {
  if (u == w || !emb.contains(u) || !emb.contains(w)) {
    throw Error(Errc::VerticesNotOnFace, "invalid endpoints");
  }
  if (emb.has_edge(u, w)) {
    throw Error(Errc::EdgeAlreadyPresent, std::to_string(u) + "-" + std::to_string(w));
  }
  std::vector<VertexId> walk = face.boundary;
  if (face.is_outer) {
    if (!detail::cyclic_equal(walk, emb.outer_face())) {
      throw Error(Errc::VerticesNotOnFace, "face is not the current outer face");
    }
    std::reverse(walk.begin(), walk.end());
  }
  if (walk.size() < 3) throw Error(Errc::VerticesNotOnFace, "face too short");
  for (std::size_t i = 0; i < walk.size(); ++i) {
    VertexId a = detail::cyclic_prev(std::span<const VertexId>(walk), i);
    if (!emb.has_edge(a, walk[i]) ||
        face_successor(emb, a, walk[i]) != detail::cyclic_next(std::span<const VertexId>(walk), i)) {
      throw Error(Errc::VerticesNotOnFace, "given boundary is not a face walk");
    }
  }
  const std::size_t i = detail::index_of(walk, u);
  const std::size_t j = detail::index_of(walk, w);
  if (i == walk.size() || j == walk.size()) {
    throw Error(Errc::VerticesNotOnFace, std::to_string(u) + "-" + std::to_string(w));
  }
  EmbeddingEditor ed(emb);
  // The corner of the face at x lies between walk-next and walk-prev of x.
  ed.insert_before(u, detail::cyclic_prev(std::span<const VertexId>(walk), i), w);
  ed.insert_before(w, detail::cyclic_prev(std::span<const VertexId>(walk), j), u);
  if (face.is_outer) {
    auto [keep, bounded] = split_walk(walk, u, w);
    std::reverse(keep.begin(), keep.end());
    ed.outer() = detail::anchor_like(std::move(keep), emb.outer_face());
  }
  return std::move(ed).build();
}

/// Inserts vertex `v` into a face, joined to `rotation` (its counter-clockwise
/// neighbour list). For a bounded face the rotation must be the full face
/// walk. For the outer face the rotation u1..us must appear as a consecutive
/// segment of the outer walk (us, ..., u1 in the counter-clockwise boundary),
/// and v takes the place of u2..u(s-1) on the boundary.
inline PlanarEmbedding insert_vertex(const PlanarEmbedding& emb, VertexId v, std::span<const VertexId> rotation,
                                     bool on_outer) {
  if (emb.contains(v)) throw Error(Errc::InvalidParameter, "vertex id in use");
  if (v < 0) throw Error(Errc::InvalidParameter, "negative vertex id");
  const std::size_t s = rotation.size();
  if (s < (on_outer ? 2u : 3u)) throw Error(Errc::InvalidParameter, "rotation too short");
  for (VertexId u : rotation) {
    if (!emb.contains(u)) throw Error(Errc::VerticesNotOnFace, "unknown neighbour");
  }
  // Face-walk consistency of the segment u1 -> u2 -> ... -> us.
  for (std::size_t i = 0; i + 1 < s; ++i) {
    if (!emb.has_edge(rotation[i], rotation[i + 1])) throw Error(Errc::VerticesNotOnFace, "segment edge missing");
  }
  for (std::size_t i = 1; i + 1 < s; ++i) {
    if (face_successor(emb, rotation[i - 1], rotation[i]) != rotation[i + 1]) {
      throw Error(Errc::VerticesNotOnFace, "segment is not a face walk");
    }
  }
  std::vector<VertexId> outer = emb.outer_face();
  if (!on_outer) {
    if (!emb.has_edge(rotation[s - 1], rotation[0]) ||
        face_successor(emb, rotation[s - 2], rotation[s - 1]) != rotation[0] ||
        face_successor(emb, rotation[s - 1], rotation[0]) != rotation[1]) {
      throw Error(Errc::VerticesNotOnFace, "rotation does not close a face");
    }
    if (walk_face(emb, rotation[0], rotation[1]).size() != s) {
      throw Error(Errc::VerticesNotOnFace, "rotation is not a whole face");
    }
    if (s >= 2 && detail::walk_contains(std::vector<VertexId>(outer.rbegin(), outer.rend()), rotation[0], rotation[1])) {
      throw Error(Errc::VerticesNotOnFace, "face is the outer face");
    }
  } else {
    // Find us, u(s-1), ..., u1 consecutively in the counter-clockwise cycle.
    std::size_t at = outer.size();
    for (std::size_t p = 0; p < outer.size() && at == outer.size(); ++p) {
      bool match = s <= outer.size();
      for (std::size_t q = 0; q < s && match; ++q) {
        match = outer[(p + q) % outer.size()] == rotation[s - 1 - q];
      }
      if (match) at = p;
    }
    if (at == outer.size()) throw Error(Errc::VerticesNotOnFace, "segment not on the outer face");
    std::vector<VertexId> patched;
    patched.push_back(rotation[s - 1]);
    patched.push_back(v);
    for (std::size_t q = s - 1; q < outer.size(); ++q) patched.push_back(outer[(at + q) % outer.size()]);
    outer = detail::anchor_like(std::move(patched), emb.outer_face());
  }
  EmbeddingEditor ed(emb);
  ed.revive(v);
  for (std::size_t i = 0; i < s; ++i) {
    VertexId u = rotation[i];
    if (i > 0 || !on_outer) {
      ed.insert_before(u, rotation[(i + s - 1) % s], v);
    } else {
      ed.insert_after(u, rotation[1], v);
    }
  }
  ed.rotation(v).assign(rotation.begin(), rotation.end());
  ed.outer() = std::move(outer);
  return std::move(ed).build();
}

}  // namespace ntdyn
