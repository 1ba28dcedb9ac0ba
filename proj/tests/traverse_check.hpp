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

// Independent check of a convex traverse against its definition. Returns an
// empty string when every condition holds, otherwise the first failure.

#pragma once

#include <set>
#include <string>

#include "support.hpp"

namespace cubecheck::testing {

inline std::string check_traverse(const Graph& g, const ConvexTraverse& t, EdgeId e1, EdgeId e2) {
  const Matrix d = oracle_distances(g);
  const auto& cs = t.cycles;
  if (cs.empty()) return "no cycles";
  std::vector<std::set<EdgeId>> edges(cs.size());
  std::vector<std::set<Vertex>> verts(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i].vertices;
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto e = g.edge_id(c[k], c[(k + 1) % c.size()]);
      if (!e) return "cycle " + std::to_string(i) + " uses a non-edge";
      edges[i].insert(*e);
      verts[i].insert(c[k]);
    }
    if (verts[i].size() != c.size()) return "cycle " + std::to_string(i) + " repeats a vertex";
    if (!oracle_convex_cycle(g, d, c)) return "cycle " + std::to_string(i) + " is not convex";
    if (!oracle_isometric_cycle(g, d, c)) return "cycle " + std::to_string(i) + " is not isometric";
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (edges[i].count(e1) != (i == 0)) return "first edge placement";
    if (edges[i].count(e2) != (i + 1 == cs.size())) return "last edge placement";
  }
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<EdgeId> common;
      std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(), edges[j].end(),
                            std::back_inserter(common));
      std::vector<Vertex> shared;
      std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                            std::back_inserter(shared));
      if (j == i + 1) {
        if (common.size() != 1 || shared.size() != 2) return "consecutive cycles must meet in one edge";
        if (!oracle_theta(g, d, e1, common[0])) return "shared edge outside the cut";
      } else if (!shared.empty()) {
        return "non-consecutive cycles intersect";
      }
    }

  // Sides: v1 = e1.u, u1 = e1.v, v2 the end of e2 nearer to v1.
  const Vertex v1 = g.edge(e1).u, u1 = g.edge(e1).v;
  const Edge& far = g.edge(e2);
  const Vertex v2 = d[v1][far.u] < d[u1][far.u] ? far.u : far.v;
  const Vertex u2 = far.other(v2);
  if (t.side_v.front() != v1 || t.side_v.back() != v2) return "v-side endpoints";
  if (t.side_u.front() != u1 || t.side_u.back() != u2) return "u-side endpoints";
  std::set<Vertex> all;
  for (const auto& vs : verts) all.insert(vs.begin(), vs.end());
  std::multiset<std::set<EdgeId>> classes_v, classes_u;
  const auto closure = oracle_theta_closure(g);
  auto class_of = [&](EdgeId e) {
    for (const auto& c : closure)
      if (c.count(e)) return c;
    return std::set<EdgeId>{};
  };
  for (const auto* side : {&t.side_v, &t.side_u}) {
    const auto& p = *side;
    if (static_cast<int>(p.size()) - 1 != d[p.front()][p.back()]) return "side is not a geodesic";
    std::set<std::set<EdgeId>> seen;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!all.count(p[k])) return "side leaves the traverse";
      if (k == 0) continue;
      auto e = g.edge_id(p[k - 1], p[k]);
      if (!e) return "side uses a non-edge";
      auto cls = class_of(*e);
      if (!seen.insert(cls).second) return "side repeats a theta class";
      (side == &t.side_v ? classes_v : classes_u).insert(cls);
    }
  }
  if (classes_v != classes_u) return "sides cross different classes";
  if (t.length() != d[v1][v2]) return "length";
  return "";
}

}  // namespace cubecheck::testing
