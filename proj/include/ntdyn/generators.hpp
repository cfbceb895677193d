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
 * Wheels, fans, stacked near-triangulations and flipped variants.
 *
 * All randomness comes from SeededRng: std::mt19937_64 seeded with the
 * given 64-bit seed, bounded draws by 128-bit multiply-shift. Both are fully
 * specified, so corpora regenerate bit-identically on any platform.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ntdyn/coloring.hpp"
#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"

namespace ntdyn {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64/mulshift128";

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  /// Draw in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; derives independent per-instance seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class Family { Wheel, Fan, Stacked, RandomNT };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Wheel: return "wheel";
    case Family::Fan: return "fan";
    case Family::Stacked: return "stacked";
    case Family::RandomNT: return "random_nt";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::Wheel, Family::Fan, Family::Stacked, Family::RandomNT}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

struct GeneratorSpec {
  Family family = Family::Wheel;
  int n = 0;
  int t = 3;
  int flips = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// W_n: hub 0 joined to the rim 1..n, which is the outer face.
inline PlanarEmbedding wheel(int n) {
  if (n < 3) throw Error(Errc::InvalidParameter, "wheel needs n >= 3, got " + std::to_string(n));
  std::vector<std::vector<VertexId>> rot(n + 1);
  std::vector<VertexId> outer;
  for (int i = 1; i <= n; ++i) {
    rot[0].push_back(i);
    outer.push_back(i);
    const int next = i % n + 1;
    const int prev = (i + n - 2) % n + 1;
    rot[i] = {next, 0, prev};
  }
  return PlanarEmbedding(std::move(rot), std::move(outer));
}

/// Path 0..n-1 plus apex n joined to every path vertex.
inline PlanarEmbedding fan(int n) {
  if (n < 2) throw Error(Errc::InvalidParameter, "fan needs n >= 2, got " + std::to_string(n));
  const VertexId apex = n;
  std::vector<std::vector<VertexId>> rot(n + 1);
  std::vector<VertexId> outer;
  for (int i = 0; i < n; ++i) {
    outer.push_back(i);
    rot[apex].push_back(i);
    if (i + 1 < n) rot[i].push_back(i + 1);
    rot[i].push_back(apex);
    if (i > 0) rot[i].push_back(i - 1);
  }
  outer.push_back(apex);
  return PlanarEmbedding(std::move(rot), std::move(outer));
}

namespace detail {

/// Mutable near-triangulation under construction: rotations, bounded
/// triangles and the outer cycle.
struct TriangulationBuilder {
  std::vector<std::vector<VertexId>> rot;
  std::vector<std::vector<VertexId>> triangles;
  std::vector<VertexId> outer;

  /// Polygon 0..t-1 triangulated by the fan from vertex 0.
  explicit TriangulationBuilder(int t) : rot(t) {
    for (int i = 0; i < t; ++i) outer.push_back(i);
    for (int i = 1; i < t; ++i) rot[0].push_back(i);
    for (int i = 1; i < t; ++i) {
      if (i + 1 < t) rot[i].push_back(i + 1);
      rot[i].push_back(0);
      if (i > 1) rot[i].push_back(i - 1);
    }
    for (int i = 1; i + 1 < t; ++i) triangles.push_back({0, i, i + 1});
  }

  static void insert_before(std::vector<VertexId>& r, VertexId anchor, VertexId x) {
    r.insert(std::find(r.begin(), r.end(), anchor), x);
  }

  static void insert_after(std::vector<VertexId>& r, VertexId anchor, VertexId x) {
    r.insert(std::find(r.begin(), r.end(), anchor) + 1, x);
  }

  bool adjacent(VertexId a, VertexId b) const {
    return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end();
  }

  /// Puts a new vertex into bounded triangle `f`, joined to its corners.
  void stack_into(std::size_t f) {
    const VertexId x = static_cast<VertexId>(rot.size());
    const auto tri = triangles[f];
    rot.push_back(tri);
    for (int i = 0; i < 3; ++i) insert_before(rot[tri[i]], tri[(i + 2) % 3], x);
    triangles[f] = {tri[0], tri[1], x};
    triangles.push_back({tri[1], tri[2], x});
    triangles.push_back({tri[2], tri[0], x});
  }

  PlanarEmbedding build() && { return PlanarEmbedding(std::move(rot), std::move(outer)); }
};

}  // namespace detail

/// Fan-triangulated t-gon grown to n vertices by stacking into uniformly
/// chosen bounded triangles.
inline PlanarEmbedding stacked(int t, int n, std::uint64_t seed) {
  if (t < 3 || n < t) {
    throw Error(Errc::InvalidParameter, "stacked needs 3 <= t <= n, got t=" + std::to_string(t) +
                                            " n=" + std::to_string(n));
  }
  detail::TriangulationBuilder b(t);
  SeededRng rng(seed);
  while (static_cast<int>(b.rot.size()) < n) b.stack_into(rng.below(b.triangles.size()));
  return std::move(b).build();
}

/// stacked(t, n, seed) followed by `flips` attempted flips of uniformly
/// chosen edges. An attempt is skipped when the edge is on the outer cycle
/// or the replacement chord already exists.
inline PlanarEmbedding random_near_triangulation(int t, int n, int flips, std::uint64_t seed) {
  if (flips < 0) throw Error(Errc::InvalidParameter, "flips must be >= 0");
  if (t < 3 || n < t) {
    throw Error(Errc::InvalidParameter, "random_nt needs 3 <= t <= n, got t=" + std::to_string(t) +
                                            " n=" + std::to_string(n));
  }
  detail::TriangulationBuilder b(t);
  SeededRng rng(seed);
  while (static_cast<int>(b.rot.size()) < n) b.stack_into(rng.below(b.triangles.size()));
  if (flips == 0) return std::move(b).build();

  std::vector<Edge> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(b.rot.size()); ++u) {
    for (VertexId v : b.rot[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  auto on_outer = [&](VertexId a, VertexId c) {
    for (std::size_t i = 0; i < b.outer.size(); ++i) {
      VertexId x = b.outer[i];
      VertexId y = b.outer[(i + 1) % b.outer.size()];
      if ((x == a && y == c) || (x == c && y == a)) return true;
    }
    return false;
  };
  auto prev_of = [&](VertexId at, VertexId x) {
    const auto& r = b.rot[at];
    auto i = std::find(r.begin(), r.end(), x) - r.begin();
    return r[(i + r.size() - 1) % r.size()];
  };
  for (int attempt = 0; attempt < flips; ++attempt) {
    const std::size_t idx = rng.below(edges.size());
    auto [a, c] = edges[idx];
    if (on_outer(a, c)) continue;
    // Triangles a->c->x and c->a->y share the edge ac.
    const VertexId x = prev_of(c, a);
    const VertexId y = prev_of(a, c);
    if (b.adjacent(x, y)) continue;
    auto& ra = b.rot[a];
    ra.erase(std::find(ra.begin(), ra.end(), c));
    auto& rc = b.rot[c];
    rc.erase(std::find(rc.begin(), rc.end(), a));
    detail::TriangulationBuilder::insert_after(b.rot[x], a, y);
    detail::TriangulationBuilder::insert_after(b.rot[y], c, x);
    edges[idx] = {std::min(x, y), std::max(x, y)};
  }
  return std::move(b).build();
}

inline PlanarEmbedding generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::Wheel: return wheel(spec.n);
    case Family::Fan: return fan(spec.n);
    case Family::Stacked: return stacked(spec.t, spec.n, spec.seed);
    case Family::RandomNT: return random_near_triangulation(spec.t, spec.n, spec.flips, spec.seed);
  }
  throw Error(Errc::InvalidParameter, "unknown family");
}

/// Random near-triangulation spec with t in [t_min, t_max], n in
/// [max(t, n_min), n_max] and flips in [0, flip_factor * n].
inline GeneratorSpec random_spec(SeededRng& rng, int t_min, int t_max, int n_min, int n_max, int flip_factor) {
  GeneratorSpec spec;
  spec.family = Family::RandomNT;
  spec.t = rng.between(t_min, std::min(t_max, n_max));
  spec.n = rng.between(std::max(spec.t, n_min), n_max);
  spec.flips = rng.between(0, flip_factor * spec.n);
  spec.seed = rng.next();
  return spec;
}

/// k-subsets of {1..pool} per live vertex.
inline ListAssignment random_lists(const PlanarEmbedding& emb, int k, int pool, std::uint64_t seed) {
  if (k < 1 || pool < k) {
    throw Error(Errc::InvalidParameter, "random lists need 1 <= k <= pool");
  }
  SeededRng rng(seed);
  std::vector<std::vector<Color>> raw(emb.id_bound());
  std::vector<Color> all(pool);
  for (VertexId v : emb.vertices()) {
    for (int c = 0; c < pool; ++c) all[c] = c + 1;
    for (int i = 0; i < k; ++i) std::swap(all[i], all[i + static_cast<int>(rng.below(pool - i))]);
    raw[v].assign(all.begin(), all.begin() + k);
  }
  return ListAssignment(std::move(raw));
}

}  // namespace ntdyn
