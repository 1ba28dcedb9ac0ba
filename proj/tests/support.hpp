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

// Test oracles and the shared graph corpus. The oracles only read adjacency
// from cubecheck::Graph and recompute everything else the slow way, so they
// do not share code paths with the library under test.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubecheck/cubecheck.hpp"

namespace cubecheck::testing {

using Matrix = std::vector<std::vector<int>>;

// Scalar BFS from every vertex with a queue; -1 for unreachable.
inline Matrix oracle_distances(const Graph& g) {
  const int n = g.order();
  Matrix d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x))
        if (d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
    }
  }
  return d;
}

inline bool oracle_theta(const Graph& g, const Matrix& d, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  return d[a.u][b.u] + d[a.v][b.v] != d[a.u][b.v] + d[a.v][b.u];
}

// Transitive closure of the relation as a boolean matrix (Warshall), then
// read off the classes containing each edge.
inline std::vector<std::set<EdgeId>> oracle_theta_closure(const Graph& g) {
  const Matrix d = oracle_distances(g);
  const int m = g.size();
  std::vector<std::vector<char>> r(m, std::vector<char>(m, 0));
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = 0; f < m; ++f) r[e][f] = e == f || oracle_theta(g, d, e, f);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (r[i][k])
        for (int j = 0; j < m; ++j)
          if (r[k][j]) r[i][j] = 1;
  std::set<std::set<EdgeId>> classes;
  for (EdgeId e = 0; e < m; ++e) {
    std::set<EdgeId> c;
    for (EdgeId f = 0; f < m; ++f)
      if (r[e][f]) c.insert(f);
    classes.insert(c);
  }
  return {classes.begin(), classes.end()};
}

// Two-coloring by repeated relaxation; no odd cycle search.
inline bool oracle_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// A connected graph embeds isometrically in a hypercube iff it is bipartite
// and labeling each vertex by its side of every edge cut {w : d(w,u) <
// d(w,v)} gives Hamming distance equal to graph distance: a partial cube's
// cuts are exactly its coordinate halfspaces, and any isometric labeling
// found proves the embedding exists.
inline bool oracle_hamming_embeddable(const Graph& g) {
  if (g.order() == 0) return true;
  const Matrix d = oracle_distances(g);
  for (const auto& row : d)
    for (int x : row)
      if (x < 0) return false;
  if (!oracle_bipartite(g)) return false;
  std::set<std::vector<char>> cuts;
  for (const Edge& e : g.edges()) {
    std::vector<char> side(g.order());
    for (Vertex w = 0; w < g.order(); ++w) side[w] = d[w][e.u] < d[w][e.v];
    if (side[0]) std::for_each(side.begin(), side.end(), [](char& c) { c = !c; });
    cuts.insert(side);
  }
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      int h = 0;
      for (const auto& c : cuts) h += c[a] != c[b];
      if (h != d[a][b]) return false;
    }
  return true;
}

// Interval closure: S is convex iff every vertex on a shortest path between
// two members is a member.
inline bool oracle_interval_closed(const Matrix& d, const std::vector<Vertex>& s) {
  std::vector<char> in(d.size(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex x : s)
    for (Vertex y : s)
      for (Vertex z = 0; z < static_cast<Vertex>(d.size()); ++z)
        if (!in[z] && d[x][z] + d[z][y] == d[x][y]) return false;
  return true;
}

// Distances inside the induced subgraph equal distances in g.
inline bool oracle_isometric(const Graph& g, const Matrix& d, const std::vector<Vertex>& s) {
  std::vector<int> idx(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) idx[s[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const Edge& e : g.edges())
    if (idx[e.u] >= 0 && idx[e.v] >= 0) es.emplace_back(idx[e.u], idx[e.v]);
  const Matrix ds = oracle_distances(build_graph(static_cast<int>(s.size()), es));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (ds[i][j] != d[s[i]][s[j]]) return false;
  return true;
}

// A cycle is a subgraph in its own right: it is convex or isometric only
// when it is induced, i.e. has no chords.
inline bool oracle_chordless(const Graph& g, const std::vector<Vertex>& c) {
  int inside = 0;
  for (const Edge& e : g.edges())
    if (std::count(c.begin(), c.end(), e.u) && std::count(c.begin(), c.end(), e.v)) ++inside;
  return inside == static_cast<int>(c.size());
}

inline bool oracle_convex_cycle(const Graph& g, const Matrix& d, const std::vector<Vertex>& c) {
  return oracle_chordless(g, c) && oracle_interval_closed(d, c);
}

inline bool oracle_isometric_cycle(const Graph& g, const Matrix& d, const std::vector<Vertex>& c) {
  return oracle_chordless(g, c) && oracle_isometric(g, d, c);
}

// Rotation starting at the least vertex, oriented toward its smaller
// neighbor on the cycle.
inline std::vector<Vertex> oracle_normalize_cycle(std::vector<Vertex> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

// All simple cycles of the given length, by DFS from each least vertex.
inline std::set<std::vector<Vertex>> oracle_cycles(const Graph& g, int len) {
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> used(g.order(), 0);
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(x, path[0])) out.insert(oracle_normalize_cycle(path));
      return;
    }
    for (Vertex y : g.neighbors(x))
      if (!used[y] && y > path[0]) {
        used[y] = 1;
        path.push_back(y);
        dfs(y);
        path.pop_back();
        used[y] = 0;
      }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  return out;
}

inline std::set<std::vector<Vertex>> oracle_convex_cycles(const Graph& g, int len) {
  const Matrix d = oracle_distances(g);
  std::set<std::vector<Vertex>> out;
  for (const auto& c : oracle_cycles(g, len))
    if (oracle_convex_cycle(g, d, c)) out.insert(c);
  return out;
}

inline bool oracle_is_automorphism(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex x : p) {
    if (x < 0 || x >= g.order() || seen[x]) return false;
    seen[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

// Number of automorphisms by brute force over degree-compatible maps grown
// along a BFS order. Only for small graphs.
inline std::uint64_t oracle_group_order(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex y : g.neighbors(order[h]))
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
      }
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      ++count;
      return;
    }
    const Vertex x = order[pos];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || g.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i) ok = g.adjacent(order[i], x) == g.adjacent(map[order[i]], y);
      if (!ok) continue;
      used[y] = 1;
      map[x] = y;
      rec(pos + 1);
      map[x] = -1;
      used[y] = 0;
    }
  };
  rec(0);
  return count;
}

// Cayley graph of S4 on adjacent transpositions: permutations in
// lexicographic order, neighbors by swapping positions i and i+1.
inline Graph s4_adjacent_transpositions() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::array<int, 4>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (int k = 0; k < 3; ++k) {
      auto q = perms[i];
      std::swap(q[k], q[k + 1]);
      es.emplace_back(static_cast<int>(i), index[q]);
    }
  return build_graph(24, es);
}

// x -> (a*x + b) mod n, a permutation whenever gcd(a, n) = 1.
inline std::vector<Vertex> affine_permutation(int n, int a, int b) {
  while (std::gcd(a, n) != 1) ++a;
  std::vector<Vertex> p(n);
  for (int x = 0; x < n; ++x) p[x] = static_cast<Vertex>((static_cast<long long>(a) * x + b) % n);
  return p;
}

// A few deterministic relabelings of order n.
inline std::vector<std::vector<Vertex>> relabelings(int n) {
  std::vector<std::vector<Vertex>> out;
  if (n == 0) return out;
  out.push_back(affine_permutation(n, 1, 1));
  out.push_back(affine_permutation(n, n - 1, 0));
  out.push_back(affine_permutation(n, 5, 3));
  out.push_back(affine_permutation(n, 7, n / 2));
  std::vector<Vertex> swap_halves(n);
  for (int x = 0; x < n; ++x) swap_halves[x] = x % 2 == 0 ? x / 2 : n - 1 - x / 2;
  out.push_back(swap_halves);
  return out;
}

struct Named {
  std::string name;
  Graph graph;
};

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return build_graph(a + b, es);
}

inline Graph path(int k) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return build_graph(k, es);
}

inline Graph complete(int k) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return build_graph(k, es);
}

// Heawood graph: incidence graph of the Fano plane.
inline Graph heawood() {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < 14; ++i) es.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) es.emplace_back(i, (i + 5) % 14);
  return build_graph(14, es);
}

// Region adjacency graph of seven central planes with normals x, x+y, x-y,
// x+z, x-z, y+z, y-z. Every region is a triangle, so the graph is a cubic
// partial cube; it is not vertex-transitive.
inline Graph seven_plane_regions() {
  return parse_graph6(
      "_rOc?CH?_Ga?A??@__??H?O??_G?_??OC??I??_??A?_?C???C@???A_??a???AG???G?????g????o???AK");
}

// The test corpus: named constructions of every family the library knows
// plus assorted small partial cubes and non-partial cubes.
inline const std::vector<Named>& corpus() {
  static const std::vector<Named> all = [] {
    std::vector<Named> c;
    c.push_back({"K2", complete_k2()});
    c.push_back({"P5", path(5)});
    c.push_back({"K1,3", complete_bipartite(1, 3)});
    c.push_back({"C4", cycle(4)});
    c.push_back({"C5", cycle(5)});
    c.push_back({"C6", cycle(6)});
    c.push_back({"C8", cycle(8)});
    c.push_back({"C10", cycle(10)});
    c.push_back({"K4", complete(4)});
    c.push_back({"K2,3", complete_bipartite(2, 3)});
    c.push_back({"K3,3", complete_bipartite(3, 3)});
    c.push_back({"P3xP4", cartesian_product(path(3), path(4))});
    c.push_back({"C4xP3", cartesian_product(cycle(4), path(3))});
    c.push_back({"C6xP2", cartesian_product(cycle(6), path(2))});
    c.push_back({"Q3", hypercube(3)});
    c.push_back({"Q4", hypercube(4)});
    for (int k = 3; k <= 16; ++k) c.push_back({"prism(" + std::to_string(k) + ")", prism(k)});
    c.push_back({"G(4,1)", generalized_petersen(4, 1)});
    c.push_back({"G(5,2)", generalized_petersen(5, 2)});
    c.push_back({"G(8,3)", generalized_petersen(8, 3)});
    c.push_back({"G(10,2)", generalized_petersen(10, 2)});
    c.push_back({"G(10,3)", generalized_petersen(10, 3)});
    c.push_back({"G(12,5)", generalized_petersen(12, 5)});
    c.push_back({"heawood", heawood()});
    c.push_back({"middle_levels(1)", middle_levels(1)});
    c.push_back({"middle_levels(2)", middle_levels(2)});
    c.push_back({"middle_levels(3)", middle_levels(3)});
    c.push_back({"X", graph_x()});
    c.push_back({"seven_plane_regions", seven_plane_regions()});
    c.push_back({"permutahedron", cubic_permutahedron()});
    c.push_back({"truncated_cuboctahedron", truncated_cuboctahedron()});
    c.push_back({"truncated_icosidodecahedron", truncated_icosidodecahedron()});
    return c;
  }();
  return all;
}

inline bool is_cubic_vt_partial_cube(const Graph& g) {
  return g.order() > 0 && is_cubic(g) && is_connected(g) && is_partial_cube(g).is_partial_cube &&
         is_vertex_transitive(g);
}

// Corpus graphs that are partial cubes, plus the census positives up to 16.
inline std::vector<Named> partial_cube_corpus() {
  std::vector<Named> out;
  for (const auto& x : corpus())
    if (is_connected(x.graph) && oracle_hamming_embeddable(x.graph)) out.push_back(x);
  return out;
}

inline std::vector<Named> cubic_vt_partial_cube_corpus() {
  std::vector<Named> out;
  for (const auto& x : corpus())
    if (is_cubic_vt_partial_cube(x.graph)) out.push_back(x);
  return out;
}

}  // namespace cubecheck::testing
