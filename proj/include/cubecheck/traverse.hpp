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

#include <algorithm>
#include <optional>
#include <vector>

#include "cubecheck/cycles.hpp"
#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/theta.hpp"

namespace cubecheck {

// A chain of convex cycles D1..Dn linking two theta-related edges v1u1 and
// v2u2 (v2 on the v1 side of the cut): consecutive cycles meet in exactly one
// cut edge, other pairs are disjoint, and the two sides obtained by walking
// the chain on either side of the cut are geodesics.
struct ConvexTraverse {
  std::vector<CycleRecord> cycles;
  EdgeId start_edge = 0;
  EdgeId end_edge = 0;
  std::vector<Vertex> side_v;  // v1 .. v2
  std::vector<Vertex> side_u;  // u1 .. u2

  int length() const { return static_cast<int>(side_v.size()) - 1; }
};

namespace traverse_detail {

// Walks the cycle from `from` in the direction away from `avoid` until it
// reaches an endpoint of edge `stop`; returns the visited vertices.
inline std::vector<Vertex> walk(const std::vector<Vertex>& cyc, Vertex from, Vertex avoid, const Edge& stop) {
  const int len = static_cast<int>(cyc.size());
  const int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), from) - cyc.begin());
  const int step = cyc[(at + 1) % len] == avoid ? len - 1 : 1;
  std::vector<Vertex> out{from};
  for (int i = (at + step) % len; !stop.has(out.back()); i = (i + step) % len) out.push_back(cyc[i]);
  return out;
}

struct Node {
  int cycle;
  EdgeId exit;
  Vertex v_end, u_end;
  int v_len, u_len;
  int parent;
};

}  // namespace traverse_detail

/// Breadth-first search over chains of convex cycles from e1 to e2, pruning
/// every chain whose running sides leave all v1-v2 (resp. u1-u2) geodesics.
/// The search is exhaustive over the cycles in `index`; nullopt therefore
/// means no convex traverse exists among them. Throws PreconditionError when
/// e1 and e2 are equal or not theta-related.
inline std::optional<ConvexTraverse> find_convex_traverse(const Graph& g, const DistanceMatrix& d,
                                                          const ConvexCycleIndex& index, EdgeId e1, EdgeId e2) {
  using traverse_detail::Node;
  if (e1 == e2) throw PreconditionError("find_convex_traverse: edges must differ");
  if (!theta_related(g, d, e1, e2))
    throw PreconditionError("find_convex_traverse: " + to_string(g.edge(e1)) + " and " + to_string(g.edge(e2)) +
                            " are not theta-related");
  const Vertex v1 = g.edge(e1).u, u1 = g.edge(e1).v;
  const Edge& far = g.edge(e2);
  const bool u_side_first = d(v1, far.u) < d(u1, far.u);
  const Vertex v2 = u_side_first ? far.u : far.v;
  const Vertex u2 = far.other(v2);
  const int v_total = d(v1, v2), u_total = d(u1, u2);

  auto on_v_geodesic = [&](Vertex x, int run) { return d(v1, x) == run && run + d(x, v2) == v_total; };
  auto on_u_geodesic = [&](Vertex x, int run) { return d(u1, x) == run && run + d(x, u2) == u_total; };

  std::vector<char> in_cut(g.size(), 0);
  for (EdgeId f = 0; f < g.size(); ++f) in_cut[f] = theta_related(g, d, e1, f);

  std::vector<Node> nodes;
  std::vector<int> queue;

  // Appends cycle c entered through edge (v_in, u_in) as a successor of
  // `parent` when its geometry fits.
  auto try_cycle = [&](int c, EdgeId entry, Vertex v_in, Vertex u_in, int v_run, int u_run, int parent) {
    EdgeId exit = -1;
    for (EdgeId f : index.edges_of[c])
      if (f != entry && in_cut[f]) {
        if (exit >= 0) return;  // crosses the cut more than twice
        exit = f;
      }
    if (exit < 0) return;
    const auto& cyc = index.cycles[c].vertices;
    const Edge& out_edge = g.edge(exit);
    auto pv = traverse_detail::walk(cyc, v_in, u_in, out_edge);
    auto pu = traverse_detail::walk(cyc, u_in, v_in, out_edge);
    if (pv.back() == pu.back()) return;
    const int v_run2 = v_run + static_cast<int>(pv.size()) - 1;
    const int u_run2 = u_run + static_cast<int>(pu.size()) - 1;
    if (!on_v_geodesic(pv.back(), v_run2) || !on_u_geodesic(pu.back(), u_run2)) return;
    nodes.push_back(Node{c, exit, pv.back(), pu.back(), v_run2, u_run2, parent});
    queue.push_back(static_cast<int>(nodes.size()) - 1);
  };

  auto chain_of = [&](int node) {
    std::vector<int> chain;
    for (int x = node; x >= 0; x = nodes[x].parent) chain.push_back(nodes[x].cycle);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  for (int c : index.by_edge[e1]) try_cycle(c, e1, v1, u1, 0, 0, -1);

  std::vector<char> mark(g.order(), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int cur = queue[head];
    const Node node = nodes[cur];
    if (node.exit == e2) {
      ConvexTraverse t;
      t.start_edge = e1;
      t.end_edge = e2;
      std::vector<int> chain;
      for (int x = cur; x >= 0; x = nodes[x].parent) chain.push_back(x);
      std::reverse(chain.begin(), chain.end());
      Vertex vin = v1, uin = u1;
      t.side_v.push_back(v1);
      t.side_u.push_back(u1);
      for (int x : chain) {
        const auto& cyc = index.cycles[nodes[x].cycle].vertices;
        auto pv = traverse_detail::walk(cyc, vin, uin, g.edge(nodes[x].exit));
        auto pu = traverse_detail::walk(cyc, uin, vin, g.edge(nodes[x].exit));
        t.side_v.insert(t.side_v.end(), pv.begin() + 1, pv.end());
        t.side_u.insert(t.side_u.end(), pu.begin() + 1, pu.end());
        vin = nodes[x].v_end;
        uin = nodes[x].u_end;
        t.cycles.push_back(index.cycles[nodes[x].cycle]);
      }
      return t;
    }

    // Successors meet the current cycle exactly in the exit edge and avoid
    // every earlier cycle of the chain.
    const auto chain = chain_of(cur);
    const Edge& exit_edge = g.edge(node.exit);
    for (int c : index.by_edge[node.exit]) {
      if (std::find(chain.begin(), chain.end(), c) != chain.end()) continue;
      std::fill(mark.begin(), mark.end(), 0);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        for (Vertex x : index.cycles[chain[k]].vertices) mark[x] = 2;
      for (Vertex x : index.cycles[chain.back()].vertices) mark[x] = exit_edge.has(x) ? 1 : 2;
      bool ok = true;
      for (Vertex x : index.cycles[c].vertices)
        if (mark[x] == 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      try_cycle(c, node.exit, node.v_end, node.u_end, node.v_len, node.u_len, cur);
    }
  }
  return std::nullopt;
}

inline std::optional<ConvexTraverse> find_convex_traverse(const Graph& g, EdgeId e1, EdgeId e2) {
  const DistanceMatrix d = bfs_distances(g);
  require_connected(d, "find_convex_traverse");
  return find_convex_traverse(g, d, index_convex_cycles(g, d, default_max_cycle_len(d)), e1, e2);
}

}  // namespace cubecheck
