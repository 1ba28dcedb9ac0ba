// Copyright 2026 The cubecheck Authors
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

// JSON views of the library's results. Field order is fixed by insertion
// order so equal inputs serialize to equal bytes. Requires nlohmann/json.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubecheck/census.hpp"
#include "cubecheck/classify.hpp"
#include "cubecheck/cycles.hpp"
#include "cubecheck/faces.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/theta.hpp"
#include "cubecheck/traverse.hpp"

namespace cubecheck::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json input_json(const Graph& g, const std::string& graph6, int line) {
  Json j;
  j["graph6"] = graph6;
  j["line"] = line;
  j["order"] = g.order();
  j["size"] = g.size();
  return j;
}

inline Json witness_json(const RejectionWitness& w, const Graph& g) {
  Json j;
  struct Visitor {
    Json& j;
    void operator()(const DisconnectedWitness& x) const {
      j["kind"] = "disconnected";
      j["unreachable"] = x.unreachable;
    }
    void operator()(const OddCycleWitness& x) const {
      j["kind"] = "odd_cycle";
      j["cycle"] = x.cycle;
    }
    void operator()(const TransitivityWitness& x) const {
      j["kind"] = "not_transitive";
      j["edges"] = Json::array({x.e, x.f, x.h});
    }
    void operator()(const HammingWitness& x) const {
      j["kind"] = "hamming";
      j["pair"] = Json::array({x.u, x.v});
      j["hamming"] = x.hamming;
      j["distance"] = x.distance;
    }
  };
  std::visit(Visitor{j}, w);
  j["detail"] = describe(w, g);
  return j;
}

inline Json recognition_json(const Graph& g, const PartialCubeVerdict& v) {
  Json j;
  j["partial_cube"] = v.is_partial_cube;
  if (v.classes) {
    Json classes = Json::array();
    for (const auto& cls : v.classes->classes) {
      Json edges = Json::array();
      for (EdgeId e : cls) edges.push_back(edge_json(g.edge(e)));
      classes.push_back(std::move(edges));
    }
    j["theta_classes"] = std::move(classes);
  }
  if (v.labeling) {
    j["dimension"] = v.labeling->dim;
    Json labels = Json::array();
    for (Vertex u = 0; u < g.order(); ++u) labels.push_back(v.labeling->hex(u));
    j["labels"] = std::move(labels);
  }
  if (v.witness) j["witness"] = witness_json(*v.witness, g);
  return j;
}

inline Json signature_json(const GirthSignature& s) {
  Json j;
  auto triple = [](const GirthSignature::Triple& t) {
    Json a = Json::array();
    for (int x : t) a.push_back(x == GirthSignature::kMissing ? Json(nullptr) : Json(x));
    return a;
  };
  j["global"] = triple(s.global);
  j["constant"] = s.constant;
  return j;
}

inline Json verdict_json(const ClassificationVerdict& v) {
  Json j;
  j["tag"] = tag_name(v);
  if (is_positive(v.tag)) {
    j["reference"] = v.reference;
    j["mapping"] = v.mapping;
  } else {
    j["witness"] = v.witness;
  }
  if (v.signature) j["signature"] = signature_json(*v.signature);
  return j;
}

inline Json cycles_json(const std::vector<CycleRecord>& cycles) {
  Json a = Json::array();
  for (const auto& c : cycles) a.push_back(c.vertices);
  return a;
}

inline Json euler_json(const EulerReport& r) {
  Json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["f4"] = r.f4;
  j["f6"] = r.f6;
  j["f"] = r.f;
  j["chi"] = r.chi;
  j["3n=2e"] = r.edges_match;
  j["4f4=n"] = r.squares_match;
  j["3f6=n"] = r.hexagons_match;
  j["chi=n/12"] = r.chi_matches;
  return j;
}

inline Json claims_json(const ClaimsAudit& a) {
  Json j;
  j["passed"] = a.passed();
  j["squares"] = a.squares;
  j["convex_cycles"] = a.convex_cycles;
  j["overlapping_pairs"] = a.overlapping_pairs;
  Json vs = Json::array();
  for (const auto& v : a.violations) {
    Json x;
    x["kind"] = to_string(v.kind);
    x["first"] = v.first.vertices;
    if (!v.second.vertices.empty()) x["second"] = v.second.vertices;
    vs.push_back(std::move(x));
  }
  j["violations"] = std::move(vs);
  return j;
}

inline Json traverse_json(const Graph& g, const ConvexTraverse& t) {
  Json j;
  j["start_edge"] = edge_json(g.edge(t.start_edge));
  j["end_edge"] = edge_json(g.edge(t.end_edge));
  j["length"] = t.length();
  std::vector<CycleRecord> cs = t.cycles;
  j["cycles"] = cycles_json(cs);
  j["side_v"] = t.side_v;
  j["side_u"] = t.side_u;
  return j;
}

inline Json coloring_json(const Graph& g, const ColoringReport& r) {
  Json j;
  j["k"] = r.k;
  Json colors = Json::array();
  for (EdgeId e = 0; e < g.size(); ++e) {
    Json x = edge_json(g.edge(e));
    x.push_back(color_name(r.color[e]));
    colors.push_back(std::move(x));
  }
  j["colors"] = std::move(colors);
  j["green_red_steps"] = r.relation_orders[0];
  j["green_blue_steps"] = r.relation_orders[1];
  j["blue_red_steps"] = r.relation_orders[2];
  j["all_colors_at_every_vertex"] = r.all_colors_at_every_vertex;
  return j;
}

inline Json census_json(const CensusResult& c, int n_max) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["max_n"] = n_max;
  Json levels = Json::array();
  for (const auto& l : c.levels) {
    Json x;
    x["n"] = l.n;
    x["count"] = l.count;
    Json pos = Json::array();
    for (const auto& row : c.rows)
      if (row.n == l.n && is_positive(row.verdict.tag)) {
        Json p;
        p["graph6"] = row.graph6;
        p["tag"] = tag_name(row.verdict);
        pos.push_back(std::move(p));
      }
    x["vertex_transitive_partial_cubes"] = std::move(pos);
    levels.push_back(std::move(x));
  }
  j["levels"] = std::move(levels);
  j["contradictions"] = c.contradiction_graph6;
  return j;
}

}  // namespace cubecheck::report
