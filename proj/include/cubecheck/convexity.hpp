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

#include <span>
#include <stdexcept>
#include <vector>

#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/theta.hpp"

namespace cubecheck {

namespace convexity_detail {

inline std::vector<char> membership(const Graph& g, std::span<const Vertex> s, const char* what) {
  if (s.empty()) throw PreconditionError(std::string(what) + ": empty vertex set");
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw PreconditionError(std::string(what) + ": vertex out of range");
    in[v] = 1;
  }
  return in;
}

inline bool induces_connected(const Graph& g, const std::vector<char>& in, Vertex start) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1, total = 0;
  for (char c : in) total += c;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == total;
}

}  // namespace convexity_detail

/// Interval closure: every vertex on a shortest path between two members of
/// s is itself a member.
inline bool is_convex_subgraph(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> s) {
  auto in = convexity_detail::membership(g, s, "is_convex_subgraph");
  require_connected(d, "is_convex_subgraph");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const int dxy = d(s[i], s[j]);
      for (Vertex z = 0; z < g.order(); ++z)
        if (!in[z] && d(s[i], z) + d(z, s[j]) == dxy) return false;
    }
  return true;
}

/// Convexity Lemma test for partial cubes: s induces a connected subgraph and
/// no edge with exactly one end in s is theta-related to an edge inside s.
inline bool convexity_lemma_check(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> s) {
  auto in = convexity_detail::membership(g, s, "convexity_lemma_check");
  require_connected(d, "convexity_lemma_check");
  if (!convexity_detail::induces_connected(g, in, s.front())) return false;
  std::vector<EdgeId> inside, leaving;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const int ends = in[g.edge(e).u] + in[g.edge(e).v];
    if (ends == 2) inside.push_back(e);
    if (ends == 1) leaving.push_back(e);
  }
  for (EdgeId f : leaving)
    for (EdgeId e : inside)
      if (theta_related(g, d, e, f)) return false;
  return true;
}

/// Distances inside the subgraph induced by s agree with distances in g.
inline bool is_isometric_subgraph(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> s) {
  convexity_detail::membership(g, s, "is_isometric_subgraph");
  const Graph h = induced_subgraph(g, s);
  const DistanceMatrix dh = bfs_distances(h);
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (!dh.reachable(i, j) || dh(i, j) != d(s[i], s[j])) return false;
  return true;
}

namespace convexity_detail {

inline std::vector<EdgeId> path_edges(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) throw PreconditionError("is_geodesic: empty path");
  std::vector<char> seen(g.order(), 0);
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.order() || seen[path[i]])
      throw PreconditionError("is_geodesic: not a path (vertex repeated or out of range at position " +
                              std::to_string(i) + ")");
    seen[path[i]] = 1;
    if (i > 0) {
      auto e = g.edge_id(path[i - 1], path[i]);
      if (!e)
        throw PreconditionError("is_geodesic: not a path (" + std::to_string(path[i - 1]) + "," +
                                std::to_string(path[i]) + " not adjacent)");
      out.push_back(*e);
    }
  }
  return out;
}

}  // namespace convexity_detail

/// True iff the path's length equals the distance between its ends.
inline bool is_geodesic(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> path) {
  const auto edges = convexity_detail::path_edges(g, path);
  return static_cast<int>(edges.size()) == d(path.front(), path.back());
}

/// True iff the path's edges lie in pairwise different theta classes.
inline bool crosses_distinct_classes(const Graph& g, const ThetaPartition& tp, std::span<const Vertex> path) {
  const auto edges = convexity_detail::path_edges(g, path);
  std::vector<char> used(tp.class_count(), 0);
  for (EdgeId e : edges) {
    if (used[tp.class_of[e]]) return false;
    used[tp.class_of[e]] = 1;
  }
  return true;
}

/// Geodesic test for a graph known to be a partial cube with classes tp; the
/// length test and the class test must agree, and a disagreement is a logic
/// error in the caller's premise.
inline bool is_geodesic(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> path,
                        const ThetaPartition& tp) {
  const bool by_length = is_geodesic(g, d, path);
  if (by_length != crosses_distinct_classes(g, tp, path))
    throw std::logic_error("is_geodesic: length and theta-class characterizations disagree");
  return by_length;
}

}  // namespace cubecheck
