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

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"

namespace ntdyn {

/// Colours are positive opaque labels; 0 marks an uncoloured vertex.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Available colours per vertex id, each list sorted and duplicate free.
class ListAssignment {
 public:
  ListAssignment() = default;

  explicit ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& list : lists_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (!list.empty() && list.front() <= 0) {
        throw Error(Errc::InvalidParameter, "colours must be positive");
      }
    }
  }

  /// {1..k} at every id below `id_bound`.
  static ListAssignment uniform(int id_bound, int k) {
    std::vector<Color> base(k);
    for (int c = 0; c < k; ++c) base[c] = c + 1;
    return ListAssignment(std::vector<std::vector<Color>>(id_bound, base));
  }

  int id_bound() const { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& operator[](VertexId v) const { return lists_.at(v); }
  const std::vector<std::vector<Color>>& lists() const { return lists_; }

  bool contains(VertexId v, Color c) const {
    return v >= 0 && v < id_bound() && std::binary_search(lists_[v].begin(), lists_[v].end(), c);
  }

  /// Smallest list size over the live vertices of `emb`.
  int min_size(const PlanarEmbedding& emb) const {
    int best = -1;
    for (VertexId v : emb.vertices()) {
      int sz = v < id_bound() ? static_cast<int>(lists_[v].size()) : 0;
      best = best < 0 ? sz : std::min(best, sz);
    }
    return std::max(best, 0);
  }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Colour per vertex id; kUncolored where unassigned.
struct Coloring {
  std::vector<Color> colors;

  Coloring() = default;
  explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {}
  static Coloring empty(int id_bound) { return Coloring(std::vector<Color>(id_bound, kUncolored)); }

  Color operator[](VertexId v) const {
    return v >= 0 && v < static_cast<int>(colors.size()) ? colors[v] : kUncolored;
  }
  void set(VertexId v, Color c) {
    if (v >= static_cast<int>(colors.size())) colors.resize(v + 1, kUncolored);
    colors[v] = c;
  }
  bool is_total_on(const PlanarEmbedding& emb) const {
    for (VertexId v : emb.vertices()) {
      if ((*this)[v] == kUncolored) return false;
    }
    return true;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Number of distinct colours on the coloured neighbours of v.
inline int distinct_neighbor_colors(const PlanarEmbedding& emb, const Coloring& phi, VertexId v) {
  std::vector<Color> seen;
  for (VertexId u : emb.rotation(v)) {
    Color c = phi[u];
    if (c != kUncolored && std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  }
  return static_cast<int>(seen.size());
}

inline bool is_proper(const PlanarEmbedding& emb, const Coloring& phi) {
  if (!phi.is_total_on(emb)) throw Error(Errc::PartialColoring, "is_proper");
  for (auto [u, v] : emb.edges()) {
    if (phi[u] == phi[v]) return false;
  }
  return true;
}

/// True iff v sees at least min(r, deg v) colours (vacuous at degree 0).
inline bool dynamic_ok_at(const PlanarEmbedding& emb, const Coloring& phi, VertexId v, int r) {
  return distinct_neighbor_colors(emb, phi, v) >= std::min(r, emb.degree(v));
}

inline bool is_r_dynamic(const PlanarEmbedding& emb, const Coloring& phi, int r) {
  if (!is_proper(emb, phi)) throw Error(Errc::NotProper, "is_r_dynamic");
  for (VertexId v : emb.vertices()) {
    if (!dynamic_ok_at(emb, phi, v, r)) return false;
  }
  return true;
}

/// Checks every coloured id against its list.
inline bool respects_lists(const Coloring& phi, const ListAssignment& lists) {
  for (VertexId v = 0; v < static_cast<VertexId>(phi.colors.size()); ++v) {
    if (phi.colors[v] != kUncolored && !lists.contains(v, phi.colors[v])) return false;
  }
  return true;
}

/// Colours c in L(v) such that setting phi(v) = c keeps v's edges proper and
/// the dynamic condition true at v and at each neighbour of v.
inline std::vector<Color> valid_extensions(const PlanarEmbedding& emb, const Coloring& partial, VertexId v,
                                           const ListAssignment& lists, int r) {
  std::vector<Color> out;
  if (v >= lists.id_bound()) return out;
  Coloring phi = partial;
  for (Color c : lists[v]) {
    bool ok = true;
    for (VertexId u : emb.rotation(v)) ok = ok && partial[u] != c;
    if (!ok) continue;
    phi.set(v, c);
    ok = dynamic_ok_at(emb, phi, v, r);
    for (VertexId u : emb.rotation(v)) ok = ok && dynamic_ok_at(emb, phi, u, r);
    if (ok) out.push_back(c);
  }
  return out;
}

enum class ViolationKind { Uncolored, Monochromatic, NotDynamic, OutsideList };

struct Violation {
  ViolationKind kind;
  VertexId vertex = -1;
  VertexId other = -1;
  std::string message;
};

/// First problem found, checking colouring, propriety, lists, then the
/// dynamic condition in vertex order.
inline std::optional<Violation> find_violation(const PlanarEmbedding& emb, const Coloring& phi, int r,
                                               const ListAssignment* lists = nullptr) {
  for (VertexId v : emb.vertices()) {
    if (phi[v] == kUncolored) {
      return Violation{ViolationKind::Uncolored, v, -1, "vertex " + std::to_string(v) + " is uncoloured"};
    }
  }
  for (auto [u, v] : emb.edges()) {
    if (phi[u] == phi[v]) {
      return Violation{ViolationKind::Monochromatic, u, v,
                       "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic (colour " +
                           std::to_string(phi[u]) + ")"};
    }
  }
  if (lists != nullptr) {
    for (VertexId v : emb.vertices()) {
      if (!lists->contains(v, phi[v])) {
        return Violation{ViolationKind::OutsideList, v, -1,
                         "vertex " + std::to_string(v) + " has colour " + std::to_string(phi[v]) +
                             " outside its list"};
      }
    }
  }
  for (VertexId v : emb.vertices()) {
    if (!dynamic_ok_at(emb, phi, v, r)) {
      return Violation{ViolationKind::NotDynamic, v, -1,
                       "vertex " + std::to_string(v) + " sees " +
                           std::to_string(distinct_neighbor_colors(emb, phi, v)) + " colours, needs " +
                           std::to_string(std::min(r, emb.degree(v)))};
    }
  }
  return std::nullopt;
}

inline int distinct_colors_used(const PlanarEmbedding& emb, const Coloring& phi) {
  std::vector<Color> used;
  for (VertexId v : emb.vertices()) used.push_back(phi[v]);
  std::sort(used.begin(), used.end());
  return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
}

}  // namespace ntdyn
