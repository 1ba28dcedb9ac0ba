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
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubecheck {

using Vertex = int;
using EdgeId = int;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph construction input (loops, out-of-range endpoints).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (disconnected input where a
/// metric is required, a non-cubic graph where a cubic one is expected, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple undirected graph on vertices 0..n-1. Adjacency is stored in CSR form
// with sorted neighbor lists; edges are numbered 0..m-1 in lexicographic order
// of (u, v), u < v. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {nbr_edge_.data() + offsets_[v], nbr_edge_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return nbr_edge_[offsets_[a] + (it - nb.begin())];
  }
  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::vector<EdgeId> nbr_edge_;
};

/// Builds a simple graph. Duplicate pairs (in either orientation) collapse to a
/// single edge; loops and out-of-range endpoints throw GraphError naming the
/// offending pair.
inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw GraphError("edge " + pair + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (a == b) throw GraphError("edge " + pair + " is a loop");
    es.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(es);
  std::vector<int> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.nbrs_.assign(g.offsets_[n], 0);
  g.nbr_edge_.assign(g.offsets_[n], 0);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  std::vector<std::pair<Vertex, EdgeId>> tmp;
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
    const Edge& e = g.edges_[id];
    g.nbrs_[fill[e.u]] = e.v;
    g.nbr_edge_[fill[e.u]++] = id;
    g.nbrs_[fill[e.v]] = e.u;
    g.nbr_edge_[fill[e.v]++] = id;
  }
  for (int v = 0; v < n; ++v) {
    tmp.clear();
    for (int i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) tmp.emplace_back(g.nbrs_[i], g.nbr_edge_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (int i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      g.nbrs_[i] = tmp[i - g.offsets_[v]].first;
      g.nbr_edge_[i] = tmp[i - g.offsets_[v]].second;
    }
  }
  return g;
}

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

/// Relabels g so that vertex v becomes perm[v]. perm must be a bijection.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<std::pair<Vertex, Vertex>> es;
  es.reserve(g.size());
  for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return build_graph(g.order(), es);
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > i) es.emplace_back(i, index[w]);
  return build_graph(static_cast<int>(vertices.size()), es);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> coloring;         // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;     // cycle v0..vk (vk adjacent to v0) otherwise
};

/// 2-colors every component by BFS. On failure returns an odd cycle through
/// the first conflicting edge, cut at the lowest common ancestor in the BFS
/// forest so the witness repeats no vertex.
inline BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteResult res;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          std::vector<Vertex> left, right;
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
          while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
          while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          left.push_back(a);
          // left runs v .. lca, right runs w .. (child of lca).
          res.bipartite = false;
          res.odd_cycle.assign(left.rbegin(), left.rend());
          res.odd_cycle.insert(res.odd_cycle.end(), right.begin(), right.end());
          return res;
        }
      }
    }
  }
  res.coloring = std::move(color);
  return res;
}

/// Cartesian product; vertex (a, b) gets index a * h.order() + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw PreconditionError("cartesian_product: empty factor");
  const int nh = h.order();
  std::vector<std::pair<Vertex, Vertex>> es;
  es.reserve(static_cast<std::size_t>(g.order()) * h.size() + static_cast<std::size_t>(nh) * g.size());
  for (const Edge& e : g.edges())
    for (Vertex b = 0; b < nh; ++b) es.emplace_back(e.u * nh + b, e.v * nh + b);
  for (Vertex a = 0; a < g.order(); ++a)
    for (const Edge& e : h.edges()) es.emplace_back(a * nh + e.u, a * nh + e.v);
  return build_graph(g.order() * nh, es);
}

}  // namespace cubecheck
