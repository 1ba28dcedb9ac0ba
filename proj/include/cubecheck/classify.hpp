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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubecheck/coxeter.hpp"
#include "cubecheck/cycles.hpp"
#include "cubecheck/distance.hpp"
#include "cubecheck/generators.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/symmetry.hpp"
#include "cubecheck/theta.hpp"

namespace cubecheck {

enum class Tag {
  Prism,
  G10_3,
  CubicPermutahedron,
  TruncatedCuboctahedron,
  TruncatedIcosidodecahedron,
  NotCubic,
  NotConnected,
  NotPartialCube,
  NotVertexTransitive,
  ContradictsTheorem,
};

inline bool is_positive(Tag t) { return t <= Tag::TruncatedIcosidodecahedron; }

struct ClassificationVerdict {
  Tag tag = Tag::NotCubic;
  int prism_param = 0;               // n of K2 x C_2n for Tag::Prism
  std::vector<Vertex> mapping;       // input vertex -> reference vertex, positive tags only
  std::string reference;             // reference constructor, positive tags only
  std::string witness;               // reason, negative tags only
  std::optional<GirthSignature> signature;
};

inline std::string tag_name(Tag t, int prism_param = 0) {
  switch (t) {
    case Tag::Prism: return "Prism(" + std::to_string(prism_param) + ")";
    case Tag::G10_3: return "G10_3";
    case Tag::CubicPermutahedron: return "CubicPermutahedron";
    case Tag::TruncatedCuboctahedron: return "TruncatedCuboctahedron";
    case Tag::TruncatedIcosidodecahedron: return "TruncatedIcosidodecahedron";
    case Tag::NotCubic: return "NotCubic";
    case Tag::NotConnected: return "NotConnected";
    case Tag::NotPartialCube: return "NotPartialCube";
    case Tag::NotVertexTransitive: return "NotVertexTransitive";
    case Tag::ContradictsTheorem: return "ContradictsTheorem";
  }
  return "?";
}

inline std::string tag_name(const ClassificationVerdict& v) { return tag_name(v.tag, v.prism_param); }

namespace classify_detail {

inline ClassificationVerdict negative(Tag t, std::string why) {
  ClassificationVerdict v;
  v.tag = t;
  v.witness = std::move(why);
  return v;
}

}  // namespace classify_detail

/// Decision pipeline for cubic vertex-transitive partial cubes: cubic,
/// connected, partial cube and vertex-transitive gates, then a branch on
/// the girth signature whose answer must be confirmed by an isomorphism to
/// the reference construction. Every other outcome of the last stage is
/// ContradictsTheorem.
inline ClassificationVerdict classify(const Graph& g) {
  using classify_detail::negative;
  if (g.order() == 0 || !is_cubic(g)) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) != 3)
        return negative(Tag::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    return negative(Tag::NotCubic, "empty graph");
  }
  const DistanceMatrix d = bfs_distances(g);
  for (Vertex v = 1; v < g.order(); ++v)
    if (!d.reachable(0, v)) return negative(Tag::NotConnected, "vertex " + std::to_string(v) + " unreachable from 0");
  const PartialCubeVerdict pc = is_partial_cube(g, d);
  if (!pc.is_partial_cube) return negative(Tag::NotPartialCube, describe(*pc.witness, g));
  const auto orbit = orbit_of_vertex_0(g);
  if (static_cast<int>(orbit.size()) != g.order())
    return negative(Tag::NotVertexTransitive, "orbit of vertex 0 has " + std::to_string(orbit.size()) + " of " +
                                                  std::to_string(g.order()) + " vertices");

  ClassificationVerdict v;
  v.signature = girth_signature(g, d);
  const auto& sig = *v.signature;
  for (Vertex u = 0; u < g.order(); ++u)
    if (sig.per_vertex[u][2] == GirthSignature::kMissing) {
      v.tag = Tag::ContradictsTheorem;
      v.witness = "a pair of incident edges at vertex " + std::to_string(u) + " lies on no convex cycle";
      return v;
    }

  const auto s = sig.global;
  const int n = g.order();
  Tag tag = Tag::ContradictsTheorem;
  Graph ref;
  if (s[0] == 4 && s[1] == 4 && n % 4 == 0 && s[2] == n / 2) {
    tag = Tag::Prism;
    v.prism_param = n / 4;
    v.reference = "prism(" + std::to_string(n / 2) + ")";
    ref = prism(n / 2);
  } else if (s[0] == 6 && n == 20) {
    tag = Tag::G10_3;
    v.reference = "generalized_petersen(10,3)";
    ref = generalized_petersen(10, 3);
  } else if (s == GirthSignature::Triple{4, 6, 6} && n == 24) {
    tag = Tag::CubicPermutahedron;
    v.reference = "cubic_permutahedron()";
    ref = cubic_permutahedron();
  } else if (s == GirthSignature::Triple{4, 6, 8} && n == 48) {
    tag = Tag::TruncatedCuboctahedron;
    v.reference = "truncated_cuboctahedron()";
    ref = truncated_cuboctahedron();
  } else if (s == GirthSignature::Triple{4, 6, 10} && n == 120) {
    tag = Tag::TruncatedIcosidodecahedron;
    v.reference = "truncated_icosidodecahedron()";
    ref = truncated_icosidodecahedron();
  }
  if (tag == Tag::ContradictsTheorem) {
    v.tag = tag;
    v.prism_param = 0;
    v.witness = "signature " + to_string(s) + " on " + std::to_string(n) + " vertices matches no family";
    return v;
  }
  IsoCertificate iso = is_isomorphic(g, ref);
  if (!iso.isomorphic) {
    v.tag = Tag::ContradictsTheorem;
    v.prism_param = 0;
    v.witness = "signature " + to_string(s) + " suggests " + v.reference + " but " + iso.refutation;
    v.reference.clear();
    return v;
  }
  v.tag = tag;
  v.mapping = std::move(iso.mapping);
  return v;
}

enum class EdgeColor { Green, Red, Blue };

inline const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::Green: return "green";
    case EdgeColor::Red: return "red";
    case EdgeColor::Blue: return "blue";
  }
  return "?";
}

// Three-coloring of the edges by which two of {4-cycle, convex 6-cycle,
// convex k-cycle} contain them, with the lengths of alternating walks.
struct ColoringReport {
  int k = 0;
  std::vector<EdgeColor> color;                   // per edge id
  std::array<int, 3> relation_orders{0, 0, 0};    // closing steps of green-red, green-blue, blue-red walks
  bool all_colors_at_every_vertex = false;
};

namespace classify_detail {

// Steps until an alternating a/b walk from v first returns to v after a
// b-step; -1 if some vertex lacks an edge of the needed color.
inline int alternating_walk(const Graph& g, const std::vector<EdgeColor>& color, Vertex v, EdgeColor a, EdgeColor b) {
  auto step = [&](Vertex x, EdgeColor want) -> Vertex {
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (color[ids[i]] == want) return nb[i];
    return -1;
  };
  Vertex x = v;
  for (int steps = 1; steps <= 2 * g.order(); ++steps) {
    x = step(x, steps % 2 == 1 ? a : b);
    if (x < 0) return -1;
    if (x == v && steps % 2 == 0) return steps;
  }
  return -1;
}

}  // namespace classify_detail

/// Colors edges green (4-cycle and convex 6-cycle), red (4-cycle and convex
/// k-cycle) and blue (convex 6-cycle and convex k-cycle), then measures the
/// alternating walks. Requires g to classify as the truncated cuboctahedron
/// (k = 8) or the truncated icosidodecahedron (k = 10). Throws Error naming
/// the first edge that lies on other than exactly two cycle types.
inline ColoringReport coxeter_edge_coloring(const Graph& g, int k) {
  const ClassificationVerdict v = classify(g);
  const bool ok = (k == 8 && v.tag == Tag::TruncatedCuboctahedron) ||
                  (k == 10 && v.tag == Tag::TruncatedIcosidodecahedron);
  if (!ok)
    throw PreconditionError("coxeter_edge_coloring: k=" + std::to_string(k) + " needs a graph classified as " +
                            (k == 8 ? "TruncatedCuboctahedron" : k == 10 ? "TruncatedIcosidodecahedron" : "k in {8,10}") +
                            ", got " + tag_name(v));
  const DistanceMatrix d = bfs_distances(g);
  std::vector<char> in4(g.size(), 0), in6(g.size(), 0), ink(g.size(), 0);
  auto mark = [&](int len, std::vector<char>& flag) {
    for (const auto& c : isometric_cycles_of_length(g, d, len))
      if (len == 4 || is_convex_subgraph(g, d, c.vertices))
        for (EdgeId e : c.edge_ids(g)) flag[e] = 1;
  };
  mark(4, in4);
  mark(6, in6);
  mark(k, ink);

  ColoringReport rep;
  rep.k = k;
  rep.color.resize(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in4[e] + in6[e] + ink[e] != 2)
      throw Error("coxeter_edge_coloring: edge " + to_string(g.edge(e)) + " lies on " +
                  std::to_string(in4[e] + in6[e] + ink[e]) + " of the three cycle types");
    rep.color[e] = !ink[e] ? EdgeColor::Green : !in6[e] ? EdgeColor::Red : EdgeColor::Blue;
  }
  rep.all_colors_at_every_vertex = true;
  for (Vertex x = 0; x < g.order(); ++x) {
    int seen = 0;
    for (EdgeId e : g.incident_edges(x)) seen |= 1 << static_cast<int>(rep.color[e]);
    rep.all_colors_at_every_vertex = rep.all_colors_at_every_vertex && seen == 7;
  }
  const std::array<std::array<EdgeColor, 2>, 3> pairs{{{EdgeColor::Green, EdgeColor::Red},
                                                       {EdgeColor::Green, EdgeColor::Blue},
                                                       {EdgeColor::Blue, EdgeColor::Red}}};
  for (int p = 0; p < 3; ++p) {
    int common = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      const int steps = classify_detail::alternating_walk(g, rep.color, x, pairs[p][0], pairs[p][1]);
      if (x == 0) common = steps;
      if (steps != common) common = -1;
    }
    rep.relation_orders[p] = common;
  }
  return rep;
}

}  // namespace cubecheck
