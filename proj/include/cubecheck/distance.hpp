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
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "cubecheck/graph.hpp"

namespace cubecheck {

// All-pairs hop counts, stored as a dense n x n matrix. Unreachable pairs hold
// kUnreachable and are never used in arithmetic.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr value_type kUnreachable = std::numeric_limits<value_type>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  value_type operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
  void set(Vertex u, Vertex v, value_type value) { d_[index(u, v)] = value; }

  bool connected() const {
    return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
  }

  // Largest finite distance.
  int diameter() const {
    int best = 0;
    for (value_type x : d_)
      if (x != kUnreachable) best = std::max<int>(best, x);
    return best;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<value_type> d_;
};

/// Single-source BFS; -1 marks unreachable vertices.
inline std::vector<int> bfs_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// Exact all-pairs distances. Sources are processed 64 at a time: every vertex
/// carries a word of "reached by source i" bits, and one level of all 64
/// searches advances with a single OR over each adjacency list.
inline DistanceMatrix bfs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(n);
  std::vector<std::uint64_t> visited(n), frontier(n), next(n);
  for (int base = 0; base < n; base += 64) {
    const int batch = std::min(64, n - base);
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (int i = 0; i < batch; ++i) {
      visited[base + i] = frontier[base + i] = std::uint64_t{1} << i;
      d.set(base + i, base + i, 0);
    }
    for (int level = 1;; ++level) {
      bool any = false;
      for (Vertex v = 0; v < n; ++v) {
        std::uint64_t acc = 0;
        for (Vertex w : g.neighbors(v)) acc |= frontier[w];
        acc &= ~visited[v];
        next[v] = acc;
        if (acc == 0) continue;
        any = true;
        visited[v] |= acc;
        while (acc) {
          int i = std::countr_zero(acc);
          acc &= acc - 1;
          d.set(base + i, v, static_cast<DistanceMatrix::value_type>(level));
        }
      }
      if (!any) break;
      frontier.swap(next);
    }
  }
  return d;
}

/// Throws PreconditionError unless d describes a connected graph.
inline void require_connected(const DistanceMatrix& d, const char* what) {
  if (!d.connected()) throw PreconditionError(std::string(what) + ": graph is not connected");
}

}  // namespace cubecheck
