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
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/graph6.hpp"
#include "cubecheck/symmetry.hpp"

namespace cubecheck {

inline constexpr int kDefaultEnumerationCap = 16;

/// Hard cap on the enumeration order: CUBECHECK_CAP when set to a positive
/// integer, else 16.
inline int enumeration_cap() {
  if (const char* env = std::getenv("CUBECHECK_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return kDefaultEnumerationCap;
}

namespace enumerate_detail {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Subdivides e1 and e2 with new vertices x = n, y = n+1 and joins x, y.
inline Graph insert_edge(const Graph& p, EdgeId e1, EdgeId e2) {
  const int n = p.order();
  Pairs es;
  for (EdgeId e = 0; e < p.size(); ++e)
    if (e != e1 && e != e2) es.emplace_back(p.edge(e).u, p.edge(e).v);
  const Edge a = p.edge(e1), b = p.edge(e2);
  es.insert(es.end(), {{a.u, n}, {n, a.v}, {b.u, n + 1}, {n + 1, b.v}, {n, n + 1}});
  return build_graph(n + 2, es);
}

// Replaces edge ab by a - x1 = {y1, y2} = x2 - b, where y1 ~ y2. New vertices:
// x1 = n, y1 = n+1, y2 = n+2, x2 = n+3.
inline Graph insert_diamond(const Graph& p, EdgeId e0) {
  const int n = p.order();
  Pairs es;
  for (EdgeId e = 0; e < p.size(); ++e)
    if (e != e0) es.emplace_back(p.edge(e).u, p.edge(e).v);
  const Edge a = p.edge(e0);
  es.insert(es.end(), {{a.u, n}, {n, n + 1}, {n, n + 2}, {n + 1, n + 2}, {n + 1, n + 3}, {n + 2, n + 3}, {n + 3, a.v}});
  return build_graph(n + 4, es);
}

inline std::array<Vertex, 2> others(const Graph& g, Vertex x, Vertex skip) {
  std::array<Vertex, 2> out{};
  int k = 0;
  for (Vertex w : g.neighbors(x))
    if (w != skip) out[k++] = w;
  return out;
}

inline Graph without(const Graph& g, const std::vector<Vertex>& drop, const Pairs& extra) {
  std::vector<int> index(g.order(), 0);
  for (Vertex v : drop) index[v] = -1;
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (index[v] == 0) index[v] = next++;
    else index[v] = -1;
  Pairs es;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) es.emplace_back(index[e.u], index[e.v]);
  for (auto [a, b] : extra) es.emplace_back(index[a], index[b]);
  return build_graph(next, es);
}

// Edge reduction of xy: delete x and y, join their remaining neighbors in
// pairs. Valid when the result is a simple cubic graph on at least four
// vertices; it may be disconnected (two K4s joined through a subdivided edge
// reduce only to K4 + K4).
inline bool edge_reducible(const Graph& g, EdgeId e) {
  if (g.order() < 6) return false;
  const Vertex x = g.edge(e).u, y = g.edge(e).v;
  auto [a, b] = others(g, x, y);
  auto [c, d] = others(g, y, x);
  if (g.adjacent(a, b) || g.adjacent(c, d)) return false;
  return std::minmax(a, b) != std::minmax(c, d);
}

inline std::optional<Graph> reduce_edge(const Graph& g, EdgeId e) {
  if (!edge_reducible(g, e)) return std::nullopt;
  const Vertex x = g.edge(e).u, y = g.edge(e).v;
  auto [a, b] = others(g, x, y);
  auto [c, d] = others(g, y, x);
  return without(g, {x, y}, {{a, b}, {c, d}});
}

// A diamond is named by its middle edge y1y2: both ends see exactly the same
// two other vertices x1, x2, which are not adjacent. Returns (x1, x2) with
// x1 < x2 when e is such an edge.
inline std::optional<std::array<Vertex, 2>> diamond_tips(const Graph& g, EdgeId e) {
  const Vertex y1 = g.edge(e).u, y2 = g.edge(e).v;
  auto p = others(g, y1, y2);
  auto q = others(g, y2, y1);
  if (p != q || g.adjacent(p[0], p[1])) return std::nullopt;
  return p;
}

// Removes the diamond around middle edge e and joins its outer neighbors.
inline std::optional<Graph> reduce_diamond(const Graph& g, EdgeId e) {
  if (g.order() < 8) return std::nullopt;
  auto tips = diamond_tips(g, e);
  if (!tips) return std::nullopt;
  const Vertex y1 = g.edge(e).u, y2 = g.edge(e).v;
  auto outer = [&](Vertex x) {
    for (Vertex w : g.neighbors(x))
      if (w != y1 && w != y2) return w;
    return Vertex{-1};
  };
  const Vertex a = outer((*tips)[0]), b = outer((*tips)[1]);
  if (a == b || g.adjacent(a, b)) return std::nullopt;
  return without(g, {(*tips)[0], (*tips)[1], y1, y2}, {{a, b}});
}

// Isomorphism-invariant profile of an edge, used to rule out most candidate
// reductions before a canonical labeling is needed.
inline std::array<int, 3> edge_profile(const Graph& g, EdgeId e) {
  const Vertex x = g.edge(e).u, y = g.edge(e).v;
  int triangles = 0, squares = 0;
  for (Vertex a : g.neighbors(x)) {
    if (a == y) continue;
    if (g.adjacent(a, y)) ++triangles;
    for (Vertex b : g.neighbors(y))
      if (b != x && b != a && g.adjacent(a, b)) ++squares;
  }
  std::vector<char> near(g.order(), 0);
  int reach = 0;
  for (Vertex s : {x, y})
    for (Vertex a : g.neighbors(s))
      for (Vertex b : g.neighbors(a))
        if (!near[b]) {
          near[b] = 1;
          ++reach;
        }
  return {triangles, squares, reach};
}

// Decides whether `fresh` (an edge of g) is the canonical reduction site
// among `sites`, up to automorphisms of g.
inline bool is_canonical_site(const Graph& g, const std::vector<EdgeId>& sites, EdgeId fresh) {
  std::array<int, 3> best{-1, -1, -1};
  for (EdgeId e : sites) best = std::max(best, edge_profile(g, e));
  if (edge_profile(g, fresh) != best) return false;
  std::vector<EdgeId> top;
  for (EdgeId e : sites)
    if (edge_profile(g, e) == best) top.push_back(e);
  if (top.size() == 1) return true;
  const CanonicalForm cf = canonical_form(g);
  auto key = [&](EdgeId e) {
    const Edge& x = g.edge(e);
    return std::minmax(cf.labeling[x.u], cf.labeling[x.v]);
  };
  EdgeId chosen = top[0];
  for (EdgeId e : top)
    if (key(e) > key(chosen)) chosen = e;
  const auto reps = edge_orbit_representatives(g, cf.generators);
  return reps[chosen] == reps[fresh];
}

// One representative per orbit of unordered edge pairs under the group.
inline std::vector<std::pair<EdgeId, EdgeId>> edge_pair_orbits(const Graph& g, const std::vector<Permutation>& gens) {
  const int m = g.size();
  auto pid = [m](int i, int j) { return i < j ? i * m + j : j * m + i; };
  theta_detail::UnionFind uf(m * m);
  std::vector<std::vector<EdgeId>> image;
  for (const auto& p : gens) {
    std::vector<EdgeId> img(m);
    for (EdgeId e = 0; e < m; ++e) img[e] = *g.edge_id(p[g.edge(e).u], p[g.edge(e).v]);
    image.push_back(std::move(img));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (const auto& img : image) uf.unite(pid(i, j), pid(img[i], img[j]));
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (uf.find(pid(i, j)) == pid(i, j)) out.emplace_back(i, j);
  return out;
}

inline std::vector<EdgeId> edge_orbits(const Graph& g, const std::vector<Permutation>& gens) {
  const auto reps = edge_orbit_representatives(g, gens);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (reps[e] == e) out.push_back(e);
  return out;
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

inline bool sorted_by_graph6(const std::pair<std::string, Graph>& a, const std::pair<std::string, Graph>& b) {
  return a.first < b.first;
}

}  // namespace enumerate_detail

/// Cubic graphs on 4, 6, ..., n_max vertices, one per isomorphism class, by
/// canonical construction path. Children arise from a parent by edge
/// insertion (subdivide two edges, join the new vertices) or by diamond
/// insertion; a child is kept only when the inverse of the operation that
/// built it is its canonical reduction, with edge reductions preferred over
/// diamond reductions. Parents try one insertion per orbit of their
/// automorphism group. Disconnected graphs are carried along because some
/// connected graphs reduce only to them; disjoint unions of K4, which admit
/// no reduction, seed the orders divisible by four. Graphs are returned in
/// canonical labeling, sorted by graph6 within each order; result[i] holds
/// the graphs on 2i+4 vertices.
inline std::vector<std::vector<Graph>> enumerate_all_cubic_graphs_upto(int n_max) {
  using namespace enumerate_detail;
  if (n_max % 2 != 0) throw PreconditionError("enumerate_cubic_graphs: order must be even, got " + std::to_string(n_max));
  if (n_max < 4) throw PreconditionError("enumerate_cubic_graphs: order must be at least 4");
  const int cap = enumeration_cap();
  if (n_max > cap)
    throw PreconditionError("enumerate_cubic_graphs: order " + std::to_string(n_max) + " exceeds the cap " +
                            std::to_string(cap) + " (set CUBECHECK_CAP to raise it)");
  auto k4_union = [](int copies) {
    Pairs es;
    for (int c = 0; c < copies; ++c)
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) es.emplace_back(4 * c + i, 4 * c + j);
    return canonical_graph(build_graph(4 * copies, es));
  };
  std::vector<std::vector<Graph>> levels;
  levels.push_back({k4_union(1)});
  for (int n = 6; n <= n_max; n += 2) {
    std::vector<std::pair<std::string, Graph>> found;
    auto keep = [&](const Graph& child) {
      Graph c = canonical_graph(child);
      std::string key = write_graph6(c);
      found.emplace_back(std::move(key), std::move(c));
    };
    if (n % 4 == 0) keep(k4_union(n / 4));
    for (const Graph& p : levels[(n - 2 - 4) / 2]) {
      const auto gens = automorphisms(p).generators;
      for (auto [e1, e2] : edge_pair_orbits(p, gens)) {
        Graph child = insert_edge(p, e1, e2);
        std::vector<EdgeId> sites;
        for (EdgeId e = 0; e < child.size(); ++e)
          if (edge_reducible(child, e)) sites.push_back(e);
        if (is_canonical_site(child, sites, *child.edge_id(n - 2, n - 1))) keep(child);
      }
    }
    if (n >= 8) {
      for (const Graph& p : levels[(n - 4 - 4) / 2]) {
        const auto gens = automorphisms(p).generators;
        for (EdgeId e0 : edge_orbits(p, gens)) {
          Graph child = insert_diamond(p, e0);
          bool edge_site = false;
          std::vector<EdgeId> sites;
          for (EdgeId e = 0; e < child.size() && !edge_site; ++e) {
            if (edge_reducible(child, e)) edge_site = true;
            else if (reduce_diamond(child, e)) sites.push_back(e);
          }
          if (!edge_site && is_canonical_site(child, sites, *child.edge_id(n - 3, n - 2))) keep(child);
        }
      }
    }
    std::sort(found.begin(), found.end(), sorted_by_graph6);
    std::vector<Graph> level;
    for (auto& [key, g] : found) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels;
}

/// Connected cubic graphs on 4, 6, ..., n_max vertices; same layout and
/// order as enumerate_all_cubic_graphs_upto.
inline std::vector<std::vector<Graph>> enumerate_cubic_graphs_upto(int n_max) {
  auto levels = enumerate_all_cubic_graphs_upto(n_max);
  for (auto& level : levels) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return levels;
}

/// Connected cubic graphs on n vertices.
inline std::vector<Graph> enumerate_cubic_graphs(int n) {
  auto levels = enumerate_cubic_graphs_upto(n);
  return std::move(levels.back());
}

/// Reference enumeration for small orders: every labeled connected cubic
/// graph whose labels form a breadth-first order from vertex 0, grouped by
/// exact isomorphism tests. Exponential; meant for n <= 10.
inline std::vector<Graph> enumerate_cubic_graphs_naive(int n) {
  if (n % 2 != 0 || n < 4) throw PreconditionError("enumerate_cubic_graphs_naive: need even n >= 4");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::map<std::vector<long long>, std::vector<Graph>> buckets;

  auto emit = [&]() {
    enumerate_detail::Pairs es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j]) es.emplace_back(i, j);
    Graph g = build_graph(n, es);
    const DistanceMatrix d = bfs_distances(g);
    std::vector<long long> key(n + 1, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) ++key[d(u, v)];
    auto& bucket = buckets[key];
    for (const Graph& h : bucket)
      if (is_isomorphic(g, h).isomorphic) return;
    bucket.push_back(std::move(g));
  };

  // Fills the remaining slots of vertex v with later vertices: already
  // discovered ones (index < next) or the next undiscovered label.
  auto rec = [&](auto&& self, int v, int from, int next) -> void {
    if (v == n) {
      if (next == n) emit();
      return;
    }
    if (deg[v] == 3) {
      if (next <= v + 1 && v + 1 < n) return;  // v+1 undiscovered: disconnected
      self(self, v + 1, v + 2, next);
      return;
    }
    for (int w = from; w <= std::min(next, n - 1); ++w) {
      if (adj[v][w] || deg[w] == 3) continue;
      adj[v][w] = adj[w][v] = 1;
      ++deg[v];
      ++deg[w];
      self(self, v, w + 1, w == next ? next + 1 : next);
      adj[v][w] = adj[w][v] = 0;
      --deg[v];
      --deg[w];
    }
  };
  rec(rec, 0, 1, 1);

  std::vector<std::pair<std::string, Graph>> all;
  for (auto& [key, bucket] : buckets)
    for (Graph& g : bucket) {
      Graph c = enumerate_detail::canonical_graph(g);
      all.emplace_back(write_graph6(c), std::move(c));
    }
  std::sort(all.begin(), all.end(), enumerate_detail::sorted_by_graph6);
  std::vector<Graph> out;
  for (auto& [k, g] : all) out.push_back(std::move(g));
  return out;
}

}  // namespace cubecheck
