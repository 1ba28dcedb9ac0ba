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

#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "cubecheck/graph.hpp"

namespace cubecheck {

/// C_k on 0..k-1 in cyclic order.
inline Graph cycle(int k) {
  if (k < 3) throw PreconditionError("cycle: need k >= 3, got " + std::to_string(k));
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  return build_graph(k, es);
}

inline Graph complete_k2() { return build_graph(2, {{0, 1}}); }

/// Q_d; vertex v is the bitmask of its coordinates.
inline Graph hypercube(int d) {
  if (d < 1 || d > 20) throw PreconditionError("hypercube: need 1 <= d <= 20, got " + std::to_string(d));
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex v = 0; v < (1 << d); ++v)
    for (int i = 0; i < d; ++i)
      if (!(v >> i & 1)) es.emplace_back(v, v | 1 << i);
  return build_graph(1 << d, es);
}

/// K2 x C_k; vertex s*k + i is position i on layer s.
inline Graph prism(int k) {
  if (k < 3) throw PreconditionError("prism: need k >= 3, got " + std::to_string(k));
  return cartesian_product(complete_k2(), cycle(k));
}

/// G(n,k): outer cycle 0..n-1, spokes i ~ n+i, inner edges n+i ~ n+(i+k mod n).
inline Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw PreconditionError("generalized_petersen: need 3 <= n and 1 <= k < n/2, got (" + std::to_string(n) +
                            "," + std::to_string(k) + ")");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < n; ++i) {
    es.emplace_back(i, (i + 1) % n);
    es.emplace_back(i, n + i);
    es.emplace_back(n + i, n + (i + k) % n);
  }
  return build_graph(2 * n, es);
}

/// Bitmasks of the middle levels graph: weights t and t-1 in Q_{2t-1},
/// ascending.
inline std::vector<unsigned> middle_levels_masks(int t) {
  if (t < 1 || t > 10) throw PreconditionError("middle_levels: need 1 <= t <= 10, got " + std::to_string(t));
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1U << (2 * t - 1)); ++m) {
    const int w = std::popcount(m);
    if (w == t || w == t - 1) masks.push_back(m);
  }
  return masks;
}

/// Middle levels graph; vertex i is middle_levels_masks(t)[i].
inline Graph middle_levels(int t) {
  const auto masks = middle_levels_masks(t);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] ^ masks[j]) == 1) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return build_graph(static_cast<int>(masks.size()), es);
}

// Vertex names of graph_X() in index order.
inline const std::vector<std::string>& graph_x_names() {
  static const std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "c1", "c2"};
  return names;
}

/// The ten-vertex graph X: the 8-cycle v1..v8 (0..7) with c1 (8) joined to
/// v4 and v8 and c2 (9) joined to v2 and v6.
inline Graph graph_x() {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
  es.insert(es.end(), {{8, 3}, {8, 7}, {9, 1}, {9, 5}});
  return build_graph(10, es);
}

}  // namespace cubecheck
