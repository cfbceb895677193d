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
 * Seeded stress runs: generate a corpus of random near-triangulations, colour
 * each from random lists, verify every output and aggregate statistics.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ntdyn/coloring.hpp"
#include "ntdyn/generators.hpp"
#include "ntdyn/io.hpp"
#include "ntdyn/oracle.hpp"
#include "ntdyn/reducer.hpp"

namespace ntdyn {

struct StressConfig {
  int count = 500;
  int max_n = 200;
  std::uint64_t seed = 7;
  int list_size = 6;
  int pool = 40;
  bool explore = false;
  int jobs = 1;
  int r = 3;
  int t_min = 3;
  int t_max = 10;
  int flip_factor = 3;
  /// Exploration failures on graphs up to this size are re-run through the
  /// exact solver to tell real infeasibility from engine limits.
  int witness_max_n = 12;
};

struct StressInstance {
  int index = 0;
  GeneratorSpec spec;
  std::uint64_t list_seed = 0;
  bool ok = false;
  std::string failure;
  EngineStats stats;
  /// Exploration mode: the exact solver proved the lists infeasible.
  bool proven_infeasible = false;
  std::optional<ListAssignment> witness;
};

struct StressSummary {
  StressConfig config;
  std::vector<StressInstance> instances;
  int failures = 0;
  int proven_infeasible = 0;
  int max_forbidden = 0;
  std::array<int, 6> case_counts{};
  std::vector<int> forbidden_histogram;

  /// Outside exploration mode: no failure and no extension excluded more than 5 colours.
  bool passed() const {
    if (config.explore) return true;
    return failures == 0 && max_forbidden <= kRequiredListSize - 1;
  }
};

inline StressInstance stress_instance(const StressConfig& cfg, int index) {
  StressInstance inst;
  inst.index = index;
  SeededRng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  inst.spec = random_spec(rng, cfg.t_min, cfg.t_max, 3, cfg.max_n, cfg.flip_factor);
  inst.list_seed = rng.next();
  PlanarEmbedding g = generate(inst.spec);
  ListAssignment lists = random_lists(g, cfg.list_size, cfg.pool, inst.list_seed);
  EngineOptions opts;
  opts.r = cfg.r;
  opts.explore = cfg.explore;
  opts.check_invariants = true;
  try {
    auto out = color_near_triangulation(g, lists, opts);
    if (auto bad = find_violation(g, out.coloring, cfg.r, &lists)) {
      inst.failure = "verifier rejected output: " + bad->message;
    } else {
      inst.ok = true;
    }
    inst.stats = std::move(out.stats);
  } catch (const Error& e) {
    inst.failure = e.what();
    if (cfg.explore && e.code() == Errc::ColoringFailed && g.vertex_count() <= cfg.witness_max_n) {
      try {
        SearchBudget budget;
        budget.node_limit = 5'000'000;
        if (!solve_list_r_dynamic(g, lists, cfg.r, budget).coloring) {
          inst.proven_infeasible = true;
          inst.witness = lists;
        }
      } catch (const Error&) {
      }
    }
  }
  return inst;
}

inline StressSummary run_stress(const StressConfig& cfg) {
  if (cfg.count < 0 || cfg.max_n < 3 || cfg.list_size < 1 || cfg.pool < cfg.list_size || cfg.jobs < 1) {
    throw Error(Errc::InvalidParameter, "stress parameters out of range");
  }
  StressSummary sum;
  sum.config = cfg;
  sum.instances.resize(cfg.count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.count; i = next++) sum.instances[i] = stress_instance(cfg, i);
  };
  const int jobs = std::min(cfg.jobs, std::max(cfg.count, 1));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& inst : sum.instances) {
    if (!inst.ok) ++sum.failures;
    if (inst.proven_infeasible) ++sum.proven_infeasible;
    sum.max_forbidden = std::max(sum.max_forbidden, inst.stats.max_forbidden);
    for (std::size_t c = 0; c < sum.case_counts.size(); ++c) sum.case_counts[c] += inst.stats.case_counts[c];
    const auto& h = inst.stats.forbidden_histogram;
    if (sum.forbidden_histogram.size() < h.size()) sum.forbidden_histogram.resize(h.size(), 0);
    for (std::size_t f = 0; f < h.size(); ++f) sum.forbidden_histogram[f] += h[f];
  }
  return sum;
}

namespace io {

inline json case_counts_to_json(const std::array<int, 6>& counts) {
  json j = json::object();
  for (ReductionCase c : kAllReductionCases) j[std::string(to_string(c))] = counts[static_cast<std::size_t>(c)];
  return j;
}

inline json stress_report(const StressSummary& sum) {
  const auto& cfg = sum.config;
  json failures = json::array();
  for (const auto& inst : sum.instances) {
    if (inst.ok) continue;
    json entry{{"index", inst.index},
               {"spec", spec_to_json(inst.spec)},
               {"list_seed", inst.list_seed},
               {"error", inst.failure},
               {"proven_infeasible", inst.proven_infeasible}};
    if (inst.witness) entry["witness"] = lists_to_json(*inst.witness);
    failures.push_back(std::move(entry));
  }
  return json{{"command", "stress"},
              {"config",
               {{"count", cfg.count},
                {"max_n", cfg.max_n},
                {"seed", cfg.seed},
                {"lists", cfg.list_size},
                {"pool", cfg.pool},
                {"explore", cfg.explore},
                {"r", cfg.r},
                {"rng", std::string(kRngAlgorithm)}}},
              {"instances", cfg.count},
              {"failures", sum.failures},
              {"proven_infeasible", sum.proven_infeasible},
              {"max_forbidden", sum.max_forbidden},
              {"forbidden_histogram", sum.forbidden_histogram},
              {"case_counts", case_counts_to_json(sum.case_counts)},
              {"passed", sum.passed()},
              {"failed_instances", std::move(failures)}};
}

}  // namespace io

}  // namespace ntdyn
