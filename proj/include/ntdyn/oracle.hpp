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
 * Exact backtracking solvers for small instances.
 *
 * The solver assigns vertices most-constrained first and prunes on two
 * conditions: a colour already used by a coloured neighbour, and a vertex
 * whose neighbourhood cannot reach min(r, deg) colours even if every
 * uncoloured neighbour received a fresh colour.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ntdyn/coloring.hpp"
#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"

namespace ntdyn {

struct SearchBudget {
  std::uint64_t node_limit = 200'000'000;
  double time_limit_seconds = 600.0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  bool completed = false;
};

struct SearchResult {
  std::optional<Coloring> coloring;
  SearchStats stats;
};

namespace detail {

class DynamicSearch {
 public:
  DynamicSearch(const PlanarEmbedding& emb, const ListAssignment& lists, int r, const SearchBudget& budget,
                bool interchangeable)
      : emb_(emb), r_(r), budget_(budget), start_(std::chrono::steady_clock::now()) {
    verts_ = emb.vertices();
    for (VertexId v : verts_) {
      if (v >= lists.id_bound() || lists[v].empty()) {
        empty_list_ = true;
        return;
      }
      for (Color c : lists[v]) palette_.push_back(c);
    }
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    const int m = static_cast<int>(palette_.size());
    const int bound = emb.id_bound();
    domain_.assign(bound, {});
    for (VertexId v : verts_) {
      for (Color c : lists[v]) domain_[v].push_back(palette_index(c));
    }
    interchangeable_ = interchangeable;
    for (VertexId v : verts_) {
      interchangeable_ = interchangeable_ && lists[v] == lists[verts_.front()];
    }
    color_.assign(bound, -1);
    count_.assign(static_cast<std::size_t>(bound) * m, 0);
    distinct_.assign(bound, 0);
    uncolored_.assign(bound, 0);
    need_.assign(bound, 0);
    for (VertexId v : verts_) {
      uncolored_[v] = emb.degree(v);
      need_[v] = std::min(r_, emb.degree(v));
    }
  }

  SearchResult run() {
    SearchResult result;
    if (!empty_list_ && recurse(static_cast<int>(verts_.size()), -1)) {
      Coloring phi = Coloring::empty(emb_.id_bound());
      for (VertexId v : verts_) phi.set(v, palette_[color_[v]]);
      result.coloring = std::move(phi);
    }
    stats_.completed = true;
    result.stats = stats_;
    return result;
  }

 private:
  int palette_index(Color c) const {
    return static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
  }

  int& count(VertexId v, int c) { return count_[static_cast<std::size_t>(v) * palette_.size() + c]; }

  void tick() {
    ++stats_.nodes;
    if (stats_.nodes > budget_.node_limit) {
      throw Error(Errc::BudgetExhausted, "node limit " + std::to_string(budget_.node_limit));
    }
    if ((stats_.nodes & 0xfff) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.time_limit_seconds) {
        throw Error(Errc::BudgetExhausted, "time limit exceeded");
      }
    }
  }

  void assign(VertexId v, int c) {
    color_[v] = c;
    for (VertexId u : emb_.rotation(v)) {
      if (count(u, c)++ == 0) ++distinct_[u];
      --uncolored_[u];
    }
  }

  void unassign(VertexId v) {
    int c = color_[v];
    color_[v] = -1;
    for (VertexId u : emb_.rotation(v)) {
      if (--count(u, c) == 0) --distinct_[u];
      ++uncolored_[u];
    }
  }

  bool feasible_around(VertexId v) const {
    if (distinct_[v] + uncolored_[v] < need_[v]) return false;
    for (VertexId u : emb_.rotation(v)) {
      if (distinct_[u] + uncolored_[u] < need_[u]) return false;
    }
    return true;
  }

  bool recurse(int remaining, int max_used) {
    tick();
    if (remaining == 0) return true;
    // Most constrained uncoloured vertex; ties to higher degree, then id.
    VertexId best = -1;
    int best_size = 0;
    for (VertexId v : verts_) {
      if (color_[v] >= 0) continue;
      int size = 0;
      for (int c : domain_[v]) size += count(v, c) == 0;
      if (best < 0 || size < best_size || (size == best_size && emb_.degree(v) > emb_.degree(best))) {
        best = v;
        best_size = size;
      }
    }
    if (best_size == 0) {
      ++stats_.backtracks;
      return false;
    }
    for (int c : domain_[best]) {
      if (count(best, c) != 0) continue;
      if (interchangeable_ && c > max_used + 1) break;
      assign(best, c);
      if (feasible_around(best) && recurse(remaining - 1, std::max(max_used, c))) return true;
      unassign(best);
    }
    ++stats_.backtracks;
    return false;
  }

  const PlanarEmbedding& emb_;
  int r_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<VertexId> verts_;
  std::vector<Color> palette_;
  std::vector<std::vector<int>> domain_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> distinct_;
  std::vector<int> uncolored_;
  std::vector<int> need_;
  SearchStats stats_;
  bool empty_list_ = false;
  bool interchangeable_ = false;
};

}  // namespace detail

/// Exact search for an r-dynamic L-colouring of any plane graph. An empty
/// `coloring` in the result is a proof of infeasibility; running out of
/// budget throws BudgetExhausted instead.
inline SearchResult solve_list_r_dynamic(const PlanarEmbedding& emb, const ListAssignment& lists, int r,
                                         const SearchBudget& budget = {}) {
  return detail::DynamicSearch(emb, lists, r, budget, false).run();
}

/// Least k admitting an r-dynamic colouring from {1..k}. Colours are
/// interchangeable here, so a new colour is only opened once all smaller
/// ones are in use.
inline int chi_r_dynamic(const PlanarEmbedding& emb, int r, const SearchBudget& budget = {}) {
  const int n = emb.vertex_count();
  for (int k = 1; k <= n; ++k) {
    auto res = detail::DynamicSearch(emb, ListAssignment::uniform(emb.id_bound(), k), r, budget, true).run();
    if (res.coloring) return k;
  }
  return n;
}

/// Pairwise-distinct colours, vertices in id order, smallest unused colour
/// first. Needs |L(v)| >= n everywhere.
inline Coloring rainbow_greedy(const PlanarEmbedding& emb, const ListAssignment& lists) {
  const int n = emb.vertex_count();
  if (lists.min_size(emb) < n) {
    throw Error(Errc::ListTooSmall, "rainbow colouring of " + std::to_string(n) + " vertices");
  }
  Coloring phi = Coloring::empty(emb.id_bound());
  std::vector<Color> used;
  for (VertexId v : emb.vertices()) {
    for (Color c : lists[v]) {
      if (std::find(used.begin(), used.end(), c) == used.end()) {
        phi.set(v, c);
        used.push_back(c);
        break;
      }
    }
  }
  return phi;
}

/// Searches for a k-list assignment with no r-dynamic colouring. Tries the
/// uniform lists {1..k} first, then random k-subsets of pools of size k..2k.
/// Incomplete: nullopt proves nothing.
inline std::optional<ListAssignment> adversarial_search(const PlanarEmbedding& emb, int k, int r,
                                                        const SearchBudget& budget, std::uint64_t seed,
                                                        int attempts = 200) {
  if (k < 1) throw Error(Errc::InvalidParameter, "k must be positive");
  auto refuted = [&](const ListAssignment& lists) {
    try {
      return !solve_list_r_dynamic(emb, lists, r, budget).coloring.has_value();
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExhausted) return false;
      throw;
    }
  };
  auto uniform = ListAssignment::uniform(emb.id_bound(), k);
  if (refuted(uniform)) return uniform;
  std::mt19937_64 rng(seed);
  for (int a = 0; a < attempts; ++a) {
    const int pool = k + static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
    std::vector<std::vector<Color>> raw(emb.id_bound());
    for (VertexId v : emb.vertices()) {
      std::vector<Color> all(pool);
      for (int c = 0; c < pool; ++c) all[c] = c + 1;
      for (int i = 0; i < k; ++i) {
        std::swap(all[i], all[i + static_cast<int>(rng() % static_cast<std::uint64_t>(pool - i))]);
      }
      raw[v].assign(all.begin(), all.begin() + k);
    }
    ListAssignment lists(std::move(raw));
    if (refuted(lists)) return lists;
  }
  return std::nullopt;
}

}  // namespace ntdyn
