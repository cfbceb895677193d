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
 * JSON exchange formats and DOT export.
 *
 *   graph:   {"n": int, "rotation": [[int,...],...], "outer_face": [int,...]}
 *   lists:   {"lists": [[int,...],...]}
 *   colors:  {"colors": [int,...]}
 *   trace:   {"steps": [{"case", "vertex", "rotation", "added_edges"}, ...],
 *             "base": graph + "original_ids"}
 *
 * Graph documents are written with dense ids; embeddings with tombstones are
 * renumbered in ascending id order. Trace steps keep the ids of the graph the
 * engine was given.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ntdyn/coloring.hpp"
#include "ntdyn/embedding.hpp"
#include "ntdyn/error.hpp"
#include "ntdyn/generators.hpp"
#include "ntdyn/reducer.hpp"

namespace ntdyn::io {

using nlohmann::json;

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <typename Fn>
auto parsing(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

inline json parse_text(std::string_view text) {
  return parsing("json", [&] { return json::parse(text); });
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidParameter, "cannot write " + path);
  out << text;
}

// -- graph ------------------------------------------------------------------

/// Dense renumbering of the live vertices: new id -> old id.
inline std::vector<VertexId> dense_ids(const PlanarEmbedding& emb) { return emb.vertices(); }

inline json graph_to_json(const PlanarEmbedding& emb) {
  auto ids = dense_ids(emb);
  std::vector<int> remap(emb.id_bound(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
  json rot = json::array();
  for (VertexId v : ids) {
    json r = json::array();
    for (VertexId u : emb.rotation(v)) r.push_back(remap[u]);
    rot.push_back(std::move(r));
  }
  json outer = json::array();
  for (VertexId v : emb.outer_face()) outer.push_back(remap[v]);
  return json{{"n", ids.size()}, {"rotation", std::move(rot)}, {"outer_face", std::move(outer)}};
}

inline PlanarEmbedding graph_from_json(const json& j) {
  auto [n, rotation, outer] = parsing("graph document", [&] {
    return std::tuple{j.at("n").get<int>(), j.at("rotation").get<std::vector<std::vector<VertexId>>>(),
                      j.at("outer_face").get<std::vector<VertexId>>()};
  });
  if (n < 0 || static_cast<int>(rotation.size()) != n) {
    throw Error(Errc::ParseError, "graph document: rotation has " + std::to_string(rotation.size()) +
                                      " entries, n = " + std::to_string(n));
  }
  for (const auto& r : rotation) {
    for (VertexId u : r) {
      if (u < 0 || u >= n) throw Error(Errc::MalformedEmbedding, "neighbour id out of range");
    }
  }
  for (VertexId u : outer) {
    if (u < 0 || u >= n) throw Error(Errc::MalformedEmbedding, "outer face id out of range");
  }
  return PlanarEmbedding(std::move(rotation), std::move(outer));
}

// -- lists and colourings ---------------------------------------------------

inline json lists_to_json(const ListAssignment& lists) { return json{{"lists", lists.lists()}}; }

inline ListAssignment lists_from_json(const json& j) {
  return parsing("lists document", [&] { return ListAssignment(j.at("lists").get<std::vector<std::vector<Color>>>()); });
}

inline json coloring_to_json(const Coloring& phi) { return json{{"colors", phi.colors}}; }

inline Coloring coloring_from_json(const json& j) {
  return parsing("colors document", [&] { return Coloring(j.at("colors").get<std::vector<Color>>()); });
}

/// Restricts id-indexed data to the live vertices, in ascending id order.
template <typename T>
std::vector<T> densify(const PlanarEmbedding& emb, const std::vector<T>& by_id, T fill) {
  std::vector<T> out;
  for (VertexId v : emb.vertices()) out.push_back(v < static_cast<VertexId>(by_id.size()) ? by_id[v] : fill);
  return out;
}

// -- trace ------------------------------------------------------------------

inline json step_to_json(const ReductionStep& step) {
  json added = json::array();
  for (auto [a, b] : step.added_edges) added.push_back({a, b});
  return json{{"case", std::string(to_string(step.config.kind))},
              {"vertex", step.config.vertex},
              {"rotation", step.removed_rotation},
              {"added_edges", std::move(added)}};
}

inline ReductionStep step_from_json(const json& j) {
  return parsing("trace step", [&] {
    ReductionStep step;
    auto kind = parse_reduction_case(j.at("case").get<std::string>());
    if (!kind) throw Error(Errc::ParseError, "unknown reduction case");
    step.config.kind = *kind;
    step.config.vertex = j.at("vertex").get<VertexId>();
    step.removed_rotation = j.at("rotation").get<std::vector<VertexId>>();
    step.config.neighbors_ccw = step.removed_rotation;
    for (const auto& e : j.at("added_edges")) step.added_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return step;
  });
}

inline json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(step_to_json(s));
  json base = graph_to_json(trace.base);
  base["original_ids"] = dense_ids(trace.base);
  return json{{"steps", std::move(steps)}, {"base", std::move(base)}};
}

inline ReductionTrace trace_from_json(const json& j) {
  ReductionTrace trace;
  parsing("trace document", [&] {
    for (const auto& s : j.at("steps")) trace.steps.push_back(step_from_json(s));
    const json& base = j.at("base");
    auto dense = graph_from_json(base);
    auto ids = base.at("original_ids").get<std::vector<VertexId>>();
    if (static_cast<int>(ids.size()) != dense.vertex_count()) throw Error(Errc::ParseError, "original_ids size");
    VertexId bound = 0;
    for (VertexId v : ids) bound = std::max(bound, v + 1);
    for (const auto& s : trace.steps) bound = std::max(bound, s.config.vertex + 1);
    EmbeddingEditor ed(PlanarEmbedding{});
    if (bound > 0) {
      ed.revive(bound - 1);
      ed.kill(bound - 1);
    }
    for (VertexId v = 0; v < dense.id_bound(); ++v) {
      ed.revive(ids[v]);
      for (VertexId u : dense.rotation(v)) ed.rotation(ids[v]).push_back(ids[u]);
    }
    for (VertexId v : dense.outer_face()) ed.outer().push_back(ids[v]);
    trace.base = std::move(ed).build_checked();
    return 0;
  });
  return trace;
}

// -- generator specs and manifests -------------------------------------------

inline json spec_to_json(const GeneratorSpec& spec) {
  return json{{"family", std::string(to_string(spec.family))},
              {"n", spec.n},
              {"t", spec.t},
              {"flips", spec.flips},
              {"seed", spec.seed}};
}

inline GeneratorSpec spec_from_json(const json& j) {
  return parsing("generator spec", [&] {
    GeneratorSpec spec;
    auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw Error(Errc::ParseError, "unknown family");
    spec.family = *fam;
    spec.n = j.at("n").get<int>();
    spec.t = j.value("t", 3);
    spec.flips = j.value("flips", 0);
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
  });
}

inline json manifest_entry(const GeneratorSpec& spec, const PlanarEmbedding& emb) {
  return json{{"spec", spec_to_json(spec)}, {"digest", digest(dump(graph_to_json(emb)))}};
}

inline json new_manifest() {
  return json{{"rng", std::string(kRngAlgorithm)}, {"digest_algorithm", "fnv1a64"}, {"entries", json::array()}};
}

// -- DOT --------------------------------------------------------------------

inline std::string to_dot(const PlanarEmbedding& emb, const Coloring* phi = nullptr) {
  std::ostringstream os;
  os << "graph G {\n";
  os << "  // outer face:";
  for (VertexId v : emb.outer_face()) os << ' ' << v;
  os << "\n";
  for (VertexId v : emb.vertices()) {
    os << "  " << v;
    if (phi != nullptr && (*phi)[v] != kUncolored) os << " [label=\"" << v << ":" << (*phi)[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : emb.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ntdyn::io
