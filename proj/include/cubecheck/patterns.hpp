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

#include "cubecheck/distance.hpp"
#include "cubecheck/generators.hpp"
#include "cubecheck/graph.hpp"

namespace cubecheck {

/// Calls visit(map) for every distance-preserving injection of the
/// connected pattern into g (pattern vertex i -> map[i]). The pattern is
/// placed in breadth-first order so each new vertex is a neighbor of an
/// already placed one. visit returns false to stop the search.
template <class Visit>
void for_each_isometric_copy(const Graph& g, const DistanceMatrix& d, const Graph& pattern, Visit&& visit) {
  const int k = pattern.order();
  if (k == 0) return;
  const DistanceMatrix dp = bfs_distances(pattern);
  require_connected(dp, "for_each_isometric_copy");
  std::vector<Vertex> order{0}, anchor{-1};
  std::vector<char> placed(k, 0);
  placed[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex w : pattern.neighbors(order[h]))
      if (!placed[w]) {
        placed[w] = 1;
        order.push_back(w);
        anchor.push_back(order[h]);
      }

  std::vector<Vertex> map(k, -1);
  std::vector<char> used(g.order(), 0);
  bool stop = false;
  auto fits = [&](int pos, Vertex x) {
    for (int i = 0; i < pos; ++i)
      if (int{d(map[order[i]], x)} != int{dp(order[i], order[pos])}) return false;
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (stop) return;
    if (pos == k) {
      if (!visit(static_cast<const std::vector<Vertex>&>(map))) stop = true;
      return;
    }
    auto place = [&](Vertex x) {
      if (used[x] || !fits(pos, x)) return;
      used[x] = 1;
      map[order[pos]] = x;
      self(self, pos + 1);
      map[order[pos]] = -1;
      used[x] = 0;
    };
    if (pos == 0) {
      for (Vertex x = 0; x < g.order() && !stop; ++x) place(x);
    } else {
      for (Vertex x : g.neighbors(map[anchor[pos]])) {
        if (stop) return;
        place(x);
      }
    }
  };
  rec(rec, 0);
}

/// First isometric copy of X whose image contains every vertex of `within`.
inline std::optional<std::vector<Vertex>> find_isometric_x(const Graph& g, const DistanceMatrix& d,
                                                           const std::vector<Vertex>& within = {}) {
  std::optional<std::vector<Vertex>> found;
  for_each_isometric_copy(g, d, graph_x(), [&](const std::vector<Vertex>& map) {
    for (Vertex v : within)
      if (std::find(map.begin(), map.end(), v) == map.end()) return true;
    found = map;
    return false;
  });
  return found;
}

}  // namespace cubecheck
