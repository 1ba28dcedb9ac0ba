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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubecheck/convexity.hpp"
#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"

namespace cubecheck {

// A cycle given by its cyclic vertex sequence; the closing edge runs from the
// last vertex back to the first. Sequences produced by this library are in
// canonical form: the lexicographically least rotation or reflection.
struct CycleRecord {
  std::vector<Vertex> vertices;
  bool convex = false;
  bool isometric = false;

  int length() const { return static_cast<int>(vertices.size()); }

  std::vector<EdgeId> edge_ids(const Graph& g) const {
    std::vector<EdgeId> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      out.push_back(*g.edge_id(vertices[i], vertices[(i + 1) % vertices.size()]));
    return out;
  }

  bool contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

  friend bool operator==(const CycleRecord& a, const CycleRecord& b) { return a.vertices == b.vertices; }
  friend bool operator<(const CycleRecord& a, const CycleRecord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  }
};

/// Least rotation/reflection of a cyclic sequence.
inline std::vector<Vertex> canonical_cycle(std::span<const Vertex> cyc) {
  const int len = static_cast<int>(cyc.size());
  std::vector<Vertex> best(cyc.begin(), cyc.end()), cand(len);
  for (int start = 0; start < len; ++start)
    for (int dir : {1, -1}) {
      for (int i = 0; i < len; ++i) cand[i] = cyc[((start + dir * i) % len + len) % len];
      if (cand < best) best = cand;
    }
  return best;
}

inline int default_max_cycle_len(const DistanceMatrix& d) { return 2 * d.diameter() + 2; }

namespace cycles_detail {

// Depth-first extension of path[0..] to isometric cycles of length len: the
// vertex placed at position j must sit at distance min(j-i, len-(j-i)) from
// every earlier position i. That makes the vertices distinct, closes the
// cycle at position len-1, and prunes every path that cannot be part of an
// isometric cycle.
struct IsometricSearch {
  const Graph& g;
  const DistanceMatrix& d;
  int len;
  Vertex floor = -1;       // every vertex after position 0 must exceed this
  Vertex last = -1;        // if set, the vertex required at position len-1
  std::vector<Vertex> path;

  bool fits(Vertex v) const {
    const int j = static_cast<int>(path.size());
    if (v <= floor) return false;
    if (last >= 0) {
      if (j == len - 1) {
        if (v != last) return false;
      } else {
        if (v == last) return false;
        const int gap = len - 1 - j;
        if (d(v, last) != std::min(gap, len - gap)) return false;
      }
    }
    for (int i = 0; i < j; ++i) {
      const int gap = j - i;
      if (d(path[i], v) != std::min(gap, len - gap)) return false;
    }
    return true;
  }

  template <class F>
  void run(F&& on_cycle) {
    if (static_cast<int>(path.size()) == len) {
      on_cycle(path);
      return;
    }
    for (Vertex w : g.neighbors(path.back()))
      if (fits(w)) {
        path.push_back(w);
        run(on_cycle);
        path.pop_back();
      }
  }
};

}  // namespace cycles_detail

/// Every isometric cycle of exactly `len` edges, canonical and sorted.
inline std::vector<CycleRecord> isometric_cycles_of_length(const Graph& g, const DistanceMatrix& d, int len) {
  std::vector<CycleRecord> out;
  if (len < 3) return out;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> start;
    start.reserve(len);
    start.push_back(s);
    cycles_detail::IsometricSearch search{g, d, len, s, -1, std::move(start)};
    search.run([&](const std::vector<Vertex>& p) {
      if (p[1] < p.back()) out.push_back(CycleRecord{p, false, true});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every isometric cycle with at most max_len edges.
inline std::vector<CycleRecord> enumerate_isometric_cycles(const Graph& g, const DistanceMatrix& d, int max_len) {
  std::vector<CycleRecord> out;
  for (int len = 3; len <= max_len; ++len) {
    auto part = isometric_cycles_of_length(g, d, len);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Every simple cycle of exactly `len` edges (isometric or not), canonical and
/// sorted. Exponential in len; intended for short cycles.
inline std::vector<CycleRecord> cycles_of_length(const Graph& g, int len) {
  std::vector<CycleRecord> out;
  std::vector<Vertex> path;
  std::vector<char> used(g.order(), 0);
  auto dfs = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(tail, path[0]) && path[1] < tail) out.push_back(CycleRecord{path, false, false});
      return;
    }
    for (Vertex w : g.neighbors(tail))
      if (w > path[0] && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self);
        path.pop_back();
        used[w] = 0;
      }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    used[s] = 1;
    dfs(dfs);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every convex cycle with at most max_len edges, each reported once in
/// canonical form, sorted by length and then vertex sequence. The graph is
/// assumed bipartite, so max_len must be even and at least 4.
inline std::vector<CycleRecord> enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d, int max_len) {
  if (max_len < 4) throw PreconditionError("enumerate_convex_cycles: max_len must be at least 4");
  if (max_len % 2 != 0) throw PreconditionError("enumerate_convex_cycles: max_len must be even");
  require_connected(d, "enumerate_convex_cycles");
  std::vector<CycleRecord> out;
  for (int len = 4; len <= max_len; len += 2)
    for (auto& c : isometric_cycles_of_length(g, d, len))
      if (is_convex_subgraph(g, d, c.vertices)) {
        c.convex = true;
        out.push_back(std::move(c));
      }
  return out;
}

inline std::vector<CycleRecord> enumerate_convex_cycles(const Graph& g, const DistanceMatrix& d) {
  return enumerate_convex_cycles(g, d, default_max_cycle_len(d));
}

/// Shortest convex cycle containing the path u1-u-u2, searched by increasing
/// length up to twice the diameter; ties resolve to the least canonical
/// sequence. nullopt means no such cycle exists.
inline std::optional<CycleRecord> shortest_convex_cycle_through(const Graph& g, const DistanceMatrix& d, Vertex u1,
                                                                Vertex u, Vertex u2) {
  if (u1 == u2 || !g.adjacent(u1, u) || !g.adjacent(u, u2))
    throw PreconditionError("shortest_convex_cycle_through: u1 and u2 must be distinct neighbors of u");
  require_connected(d, "shortest_convex_cycle_through");
  const int limit = 2 * d.diameter();
  for (int len = 3; len <= limit; ++len) {
    std::optional<CycleRecord> best;
    cycles_detail::IsometricSearch search{g, d, len, -1, u1, {u}};
    if (!search.fits(u2)) continue;
    search.path.push_back(u2);
    search.run([&](const std::vector<Vertex>& p) {
      if (!is_convex_subgraph(g, d, p)) return;
      CycleRecord c{canonical_cycle(p), true, true};
      if (!best || c.vertices < best->vertices) best = std::move(c);
    });
    if (best) return best;
  }
  return std::nullopt;
}

// Sorted triples of shortest convex cycle lengths through the three pairs of
// incident edges at each vertex. kMissing marks a pair on no convex cycle and
// sorts after every length.
struct GirthSignature {
  static constexpr int kMissing = 0;
  using Triple = std::array<int, 3>;

  Triple global{};                 // the triple at vertex 0
  std::vector<Triple> per_vertex;
  bool constant = true;            // every vertex has the same triple

  bool complete() const { return global[2] != kMissing; }
};

inline std::string to_string(const GirthSignature::Triple& t) {
  auto one = [](int x) { return x == GirthSignature::kMissing ? std::string("-") : std::to_string(x); };
  return "(" + one(t[0]) + "," + one(t[1]) + "," + one(t[2]) + ")";
}

inline GirthSignature girth_signature(const Graph& g, const DistanceMatrix& d) {
  if (g.order() == 0 || !is_cubic(g)) throw PreconditionError("girth_signature: graph is not cubic");
  GirthSignature sig;
  sig.per_vertex.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    const std::array<std::array<Vertex, 2>, 3> pairs{{{nb[0], nb[1]}, {nb[1], nb[2]}, {nb[2], nb[0]}}};
    GirthSignature::Triple t{};
    for (int k = 0; k < 3; ++k) {
      auto c = shortest_convex_cycle_through(g, d, pairs[k][0], u, pairs[k][1]);
      t[k] = c ? c->length() : GirthSignature::kMissing;
    }
    std::sort(t.begin(), t.end(), [](int a, int b) {
      if (a == GirthSignature::kMissing || b == GirthSignature::kMissing) return b == GirthSignature::kMissing && a != b;
      return a < b;
    });
    sig.per_vertex[u] = t;
  }
  sig.global = sig.per_vertex[0];
  for (const auto& t : sig.per_vertex)
    if (t != sig.global) sig.constant = false;
  return sig;
}

struct IncidentPairCoverage {
  bool covered = true;
  std::optional<std::array<Vertex, 3>> first_uncovered;  // (u1, u, u2)
};

/// Checks that every path u1-u-u2 lies on some convex cycle.
inline IncidentPairCoverage all_incident_pairs_covered(const Graph& g, const DistanceMatrix& d) {
  IncidentPairCoverage out;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!shortest_convex_cycle_through(g, d, nb[i], u, nb[j])) {
          out.covered = false;
          out.first_uncovered = std::array<Vertex, 3>{nb[i], u, nb[j]};
          return out;
        }
  }
  return out;
}

// Two cycles sharing a path of m >= 2 edges and nothing else.
struct IntertwiningRecord {
  int shared_path_edges = 0;
  int l1 = 0, l2 = 0;
  int residue = 0;                   // (l1 + l2 - 4m) / 2
  std::vector<Vertex> shared_path;   // in the order it appears along the first cycle
};

/// Returns the record iff the common vertices of c1 and c2 form one path of at
/// least two edges that both cycles traverse, with all other vertices distinct.
inline std::optional<IntertwiningRecord> intertwining(const CycleRecord& c1, const CycleRecord& c2) {
  const auto& a = c1.vertices;
  const auto& b = c2.vertices;
  const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
  std::vector<int> pos_b;
  auto index_in_b = [&](Vertex v) {
    auto it = std::find(b.begin(), b.end(), v);
    return it == b.end() ? -1 : static_cast<int>(it - b.begin());
  };
  std::vector<char> shared(la, 0);
  int count = 0;
  for (int i = 0; i < la; ++i)
    if (index_in_b(a[i]) >= 0) {
      shared[i] = 1;
      ++count;
    }
  if (count < 3 || count == la || count == lb) return std::nullopt;

  // The shared positions of a must form one arc; find where it starts.
  int start = -1, starts = 0;
  for (int i = 0; i < la; ++i)
    if (shared[i] && !shared[(i + la - 1) % la]) {
      start = i;
      ++starts;
    }
  if (starts != 1) return std::nullopt;
  std::vector<Vertex> arc;
  for (int k = 0; k < count; ++k) arc.push_back(a[(start + k) % la]);

  // The same arc must be consecutive along b, in one direction.
  const int first = index_in_b(arc[0]);
  const int second = index_in_b(arc[1]);
  int dir = 0;
  if (second == (first + 1) % lb) dir = 1;
  if (second == (first + lb - 1) % lb) dir = -1;
  if (dir == 0) return std::nullopt;
  for (int k = 0; k < count; ++k)
    if (index_in_b(arc[k]) != ((first + dir * k) % lb + lb) % lb) return std::nullopt;

  IntertwiningRecord rec;
  rec.shared_path_edges = count - 1;
  rec.l1 = la;
  rec.l2 = lb;
  const int twice = la + lb - 4 * rec.shared_path_edges;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  rec.residue = twice / 2;
  rec.shared_path = std::move(arc);
  return rec;
}

// Convex cycles of one graph together with an edge -> cycles index.
struct ConvexCycleIndex {
  std::vector<CycleRecord> cycles;
  std::vector<std::vector<int>> by_edge;
  std::vector<std::vector<EdgeId>> edges_of;  // per cycle

  ConvexCycleIndex() = default;
  ConvexCycleIndex(const Graph& g, std::vector<CycleRecord> cs) : cycles(std::move(cs)), by_edge(g.size()) {
    edges_of.reserve(cycles.size());
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
      edges_of.push_back(cycles[c].edge_ids(g));
      for (EdgeId e : edges_of.back()) by_edge[e].push_back(c);
    }
  }
};

inline ConvexCycleIndex index_convex_cycles(const Graph& g, const DistanceMatrix& d, int max_len) {
  return ConvexCycleIndex(g, enumerate_convex_cycles(g, d, max_len));
}

}  // namespace cubecheck
