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

// ntdyn: generate near-triangulations, colour them from lists, verify
// colourings and compute exact r-dynamic chromatic numbers.
//
// Exit codes: 0 success, 1 verification or bound failure, 2 usage or
// parse error, 3 precondition not met, 4 infeasible in --explore mode.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "ntdyn/ntdyn.hpp"

namespace {

using ntdyn::io::json;

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kPrecondition = 3, kInfeasible = 4 };

/// NT_SEED beats --seed when set.
std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("NT_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ntdyn::Error(ntdyn::Errc::InvalidParameter, std::string("NT_SEED is not an integer: ") + env);
    }
  }
  return flag;
}

void emit(const json& doc, const std::string& path) {
  auto text = ntdyn::io::dump(doc);
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    ntdyn::io::write_file(path, text);
  }
}

int exit_for(const ntdyn::Error& e, bool explore) {
  using ntdyn::Errc;
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::InvalidParameter:
    case Errc::MalformedEmbedding:
      return kUsage;
    case Errc::NotNearTriangulation:
    case Errc::ListTooSmall:
      return kPrecondition;
    case Errc::ColoringFailed:
      return explore ? kInfeasible : kViolation;
    default:
      return kViolation;
  }
}

json verdict_json(const ntdyn::PlanarEmbedding& g, const ntdyn::Coloring& phi, int r,
                  const ntdyn::ListAssignment* lists) {
  auto bad = ntdyn::find_violation(g, phi, r, lists);
  json v{{"ok", !bad}, {"r", r}, {"lists_checked", lists != nullptr}};
  if (bad) {
    static constexpr const char* kinds[] = {"uncolored", "monochromatic_edge", "not_dynamic", "outside_list"};
    v["violation"] = {{"kind", kinds[static_cast<int>(bad->kind)]},
                      {"vertex", bad->vertex},
                      {"other", bad->other},
                      {"message", bad->message}};
  }
  return v;
}

ntdyn::PlanarEmbedding load_graph(const std::string& path, std::string* digest = nullptr) {
  auto text = ntdyn::io::read_file(path);
  if (digest != nullptr) *digest = ntdyn::io::digest(text);
  return ntdyn::io::graph_from_json(ntdyn::io::parse_text(text));
}

// -- gen ---------------------------------------------------------------------

struct GenArgs {
  std::string family = "wheel";
  int n = 5;
  int t = 3;
  int flips = 0;
  std::uint64_t seed = 0;
  std::string out, manifest, dot;
};

int run_gen(const GenArgs& a) {
  auto fam = ntdyn::parse_family(a.family);
  if (!fam) throw ntdyn::Error(ntdyn::Errc::InvalidParameter, "unknown family '" + a.family + "'");
  ntdyn::GeneratorSpec spec{*fam, a.n, a.t, a.flips, effective_seed(a.seed)};
  auto g = ntdyn::generate(spec);
  emit(ntdyn::io::graph_to_json(g), a.out);
  if (!a.manifest.empty()) {
    json m = std::filesystem::exists(a.manifest) ? ntdyn::io::parse_text(ntdyn::io::read_file(a.manifest))
                                                 : ntdyn::io::new_manifest();
    m.at("entries").push_back(ntdyn::io::manifest_entry(spec, g));
    ntdyn::io::write_file(a.manifest, ntdyn::io::dump(m));
  }
  if (!a.dot.empty()) ntdyn::io::write_file(a.dot, ntdyn::io::to_dot(g));
  return kOk;
}

// -- color -------------------------------------------------------------------

struct ColorArgs {
  std::string graph, lists_file;
  int uniform = 0;
  int random_k = 0;
  int pool = 40;
  std::uint64_t seed = 0;
  int r = 3;
  bool explore = false;
  std::string out, trace, report, dot, witness;
};

int run_color(const ColorArgs& a) {
  std::string digest;
  auto g = load_graph(a.graph, &digest);
  const int sources = (a.lists_file.empty() ? 0 : 1) + (a.uniform > 0 ? 1 : 0) + (a.random_k > 0 ? 1 : 0);
  if (sources != 1) {
    throw ntdyn::Error(ntdyn::Errc::InvalidParameter, "give exactly one of --lists, --uniform, --random-lists");
  }
  json lists_desc;
  std::optional<ntdyn::ListAssignment> lists;
  if (!a.lists_file.empty()) {
    lists = ntdyn::io::lists_from_json(ntdyn::io::parse_text(ntdyn::io::read_file(a.lists_file)));
    lists_desc = {{"source", "file"}, {"path", a.lists_file}};
  } else if (a.uniform > 0) {
    lists = ntdyn::ListAssignment::uniform(g.id_bound(), a.uniform);
    lists_desc = {{"source", "uniform"}, {"k", a.uniform}};
  } else {
    auto seed = effective_seed(a.seed);
    lists = ntdyn::random_lists(g, a.random_k, a.pool, seed);
    lists_desc = {{"source", "random"}, {"k", a.random_k}, {"pool", a.pool}, {"seed", seed}};
  }
  if (lists->id_bound() < g.id_bound()) {
    throw ntdyn::Error(ntdyn::Errc::InvalidParameter, "list file covers fewer vertices than the graph");
  }

  json report{{"command", "color"}, {"input_digest", digest}, {"lists", lists_desc}, {"r", a.r}, {"explore", a.explore}};
  ntdyn::EngineOptions opts;
  opts.r = a.r;
  opts.explore = a.explore;
  opts.check_invariants = true;
  try {
    auto out = ntdyn::color_near_triangulation(g, *lists, opts);
    // The engine already checks itself; this is the independent re-check.
    report["verdict"] = verdict_json(g, out.coloring, a.r, &*lists);
    if (!report["verdict"]["ok"].get<bool>()) {
      report["outcome"] = "verifier_rejected";
      emit(report, a.report);
      return kViolation;
    }
    report["outcome"] = "colored";
    report["colors_used"] = ntdyn::distinct_colors_used(g, out.coloring);
    report["statistics"] = {{"steps", out.stats.steps},
                            {"case_counts", ntdyn::io::case_counts_to_json(out.stats.case_counts)},
                            {"forbidden_histogram", out.stats.forbidden_histogram},
                            {"max_forbidden", out.stats.max_forbidden}};
    ntdyn::Coloring dense(ntdyn::io::densify(g, out.coloring.colors, ntdyn::kUncolored));
    if (!a.out.empty()) emit(ntdyn::io::coloring_to_json(dense), a.out);
    if (!a.trace.empty()) emit(ntdyn::io::trace_to_json(out.trace), a.trace);
    if (!a.dot.empty()) ntdyn::io::write_file(a.dot, ntdyn::io::to_dot(g, &out.coloring));
    emit(report, a.report);
    return kOk;
  } catch (const ntdyn::Error& e) {
    if (e.code() != ntdyn::Errc::ColoringFailed || !a.explore) throw;
    report["outcome"] = "coloring_failed";
    report["error"] = e.what();
    ntdyn::SearchBudget budget;
    budget.node_limit = 20'000'000;
    try {
      auto res = ntdyn::solve_list_r_dynamic(g, *lists, a.r, budget);
      report["witness"] = {{"proven_infeasible", !res.coloring}, {"oracle_nodes", res.stats.nodes}};
      if (!res.coloring) report["witness"]["lists"] = ntdyn::io::lists_to_json(*lists)["lists"];
    } catch (const ntdyn::Error& inner) {
      report["witness"] = {{"proven_infeasible", false}, {"oracle", inner.what()}};
    }
    if (!a.witness.empty()) emit(ntdyn::io::lists_to_json(*lists), a.witness);
    emit(report, a.report);
    return kInfeasible;
  }
}

// -- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string graph, coloring, lists_file, report;
  int r = 3;
};

int run_verify(const VerifyArgs& a) {
  std::string digest;
  auto g = load_graph(a.graph, &digest);
  auto phi = ntdyn::io::coloring_from_json(ntdyn::io::parse_text(ntdyn::io::read_file(a.coloring)));
  std::optional<ntdyn::ListAssignment> lists;
  if (!a.lists_file.empty()) {
    lists = ntdyn::io::lists_from_json(ntdyn::io::parse_text(ntdyn::io::read_file(a.lists_file)));
  }
  json report{{"command", "verify"}, {"input_digest", digest}};
  report["verdict"] = verdict_json(g, phi, a.r, lists ? &*lists : nullptr);
  bool ok = report["verdict"]["ok"].get<bool>();
  report["outcome"] = ok ? "valid" : "invalid";
  emit(report, a.report);
  if (!ok) std::cerr << "violation: " << report["verdict"]["violation"]["message"].get<std::string>() << "\n";
  return ok ? kOk : kViolation;
}

// -- chi ---------------------------------------------------------------------

struct ChiArgs {
  std::string graph, report;
  int r = 3;
  std::uint64_t budget = 200'000'000;
  int cap = 12;
};

int run_chi(const ChiArgs& a) {
  std::string digest;
  auto g = load_graph(a.graph, &digest);
  if (g.vertex_count() > a.cap) {
    throw ntdyn::Error(ntdyn::Errc::InvalidParameter, "graph has " + std::to_string(g.vertex_count()) +
                                                          " vertices, above the cap of " + std::to_string(a.cap));
  }
  json report{{"command", "chi"}, {"input_digest", digest}, {"r", a.r}, {"budget", a.budget}};
  ntdyn::SearchBudget budget;
  budget.node_limit = a.budget;
  try {
    report["chi"] = ntdyn::chi_r_dynamic(g, a.r, budget);
    report["outcome"] = "exact";
  } catch (const ntdyn::Error& e) {
    if (e.code() != ntdyn::Errc::BudgetExhausted) throw;
    report["outcome"] = "budget_exhausted";
    emit(report, a.report);
    return kViolation;
  }
  emit(report, a.report);
  return kOk;
}

// -- stress ------------------------------------------------------------------

int run_stress(ntdyn::StressConfig cfg, const std::string& report_path) {
  cfg.seed = effective_seed(cfg.seed);
  auto sum = ntdyn::run_stress(cfg);
  emit(ntdyn::io::stress_report(sum), report_path);
  if (!sum.passed()) {
    for (const auto& inst : sum.instances) {
      if (inst.ok) continue;
      std::cerr << "instance " << inst.index << " failed (replay: seed " << cfg.seed << ", spec "
                << ntdyn::io::spec_to_json(inst.spec).dump() << ", list seed " << inst.list_seed
                << "): " << inst.failure << "\n";
    }
    if (sum.max_forbidden > ntdyn::kRequiredListSize - 1) {
      std::cerr << "forbidden-set size " << sum.max_forbidden << " exceeds 5\n";
    }
    return kViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ntdyn: list 3-dynamic colouring of near-triangulations"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a graph document");
  g->add_option("--family", gen.family, "wheel | fan | stacked | random_nt")->capture_default_str();
  g->add_option("--n", gen.n, "Size parameter")->capture_default_str();
  g->add_option("--t", gen.t, "Outer face length")->capture_default_str();
  g->add_option("--flips", gen.flips, "Edge flips (random_nt)")->capture_default_str();
  g->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output file (default stdout)");
  g->add_option("--manifest", gen.manifest, "Manifest file to append to");
  g->add_option("--dot", gen.dot, "DOT export");

  ColorArgs col;
  auto* c = app.add_subcommand("color", "Colour a near-triangulation from lists");
  c->add_option("graph", col.graph, "Graph document")->required();
  c->add_option("--lists", col.lists_file, "Lists document");
  c->add_option("--uniform", col.uniform, "Use {1..k} at every vertex");
  c->add_option("--random-lists", col.random_k, "Random k-subsets of {1..pool}");
  c->add_option("--pool", col.pool, "Colour pool for random lists")->capture_default_str();
  c->add_option("--seed", col.seed, "Seed for random lists")->capture_default_str();
  c->add_option("--r", col.r, "Dynamic parameter")->capture_default_str();
  c->add_flag("--explore", col.explore, "Allow lists shorter than 6");
  c->add_option("--out", col.out, "Colouring output file");
  c->add_option("--trace", col.trace, "Reduction trace output file");
  c->add_option("--report", col.report, "Report file (default stdout)");
  c->add_option("--dot", col.dot, "DOT export");
  c->add_option("--witness", col.witness, "Lists written here on infeasibility");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a colouring");
  v->add_option("graph", ver.graph, "Graph document")->required();
  v->add_option("coloring", ver.coloring, "Colouring document")->required();
  v->add_option("--r", ver.r, "Dynamic parameter")->capture_default_str();
  v->add_option("--lists", ver.lists_file, "Lists document");
  v->add_option("--report", ver.report, "Report file (default stdout)");

  ChiArgs chi;
  auto* x = app.add_subcommand("chi", "Exact r-dynamic chromatic number");
  x->add_option("graph", chi.graph, "Graph document")->required();
  x->add_option("--r", chi.r, "Dynamic parameter")->capture_default_str();
  x->add_option("--budget", chi.budget, "Search node limit")->capture_default_str();
  x->add_option("--cap", chi.cap, "Largest vertex count accepted")->capture_default_str();
  x->add_option("--report", chi.report, "Report file (default stdout)");

  ntdyn::StressConfig st;
  std::string stress_report;
  auto* s = app.add_subcommand("stress", "Colour a seeded random corpus");
  s->add_option("--count", st.count, "Number of graphs")->capture_default_str();
  s->add_option("--max-n", st.max_n, "Largest vertex count")->capture_default_str();
  s->add_option("--seed", st.seed, "Corpus seed")->capture_default_str();
  s->add_option("--lists", st.list_size, "List size")->capture_default_str();
  s->add_option("--pool", st.pool, "Colour pool")->capture_default_str();
  s->add_option("--r", st.r, "Dynamic parameter")->capture_default_str();
  s->add_flag("--explore", st.explore, "Allow lists shorter than 6 and count failures");
  s->add_option("--jobs", st.jobs, "Worker threads")->capture_default_str();
  s->add_option("--report", stress_report, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  bool explore = false;
  try {
    if (g->parsed()) return run_gen(gen);
    if (c->parsed()) {
      explore = col.explore;
      if (col.r < 1) throw ntdyn::Error(ntdyn::Errc::InvalidParameter, "--r must be positive");
      return run_color(col);
    }
    if (v->parsed()) return run_verify(ver);
    if (x->parsed()) return run_chi(chi);
    if (s->parsed()) {
      if (!st.explore && st.list_size < ntdyn::kRequiredListSize) {
        throw ntdyn::Error(ntdyn::Errc::ListTooSmall, "lists shorter than 6 need --explore");
      }
      return run_stress(st, stress_report);
    }
  } catch (const ntdyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e, explore);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
