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
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"

namespace cubecheck {

/// Djokovic-Winkler relation: ab ~ xy iff d(a,x) + d(b,y) != d(a,y) + d(b,x).
inline bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e1, EdgeId e2) {
  const Edge& p = g.edge(e1);
  const Edge& q = g.edge(e2);
  if (!d.reachable(p.u, q.u)) throw PreconditionError("theta_related: edges lie in different components");
  return int{d(p.u, q.u)} + d(p.v, q.v) != int{d(p.u, q.v)} + d(p.v, q.u);
}

// Partition of the edge set into classes of the transitive closure of theta.
// Class ids are ordered by their smallest edge id; each class lists its edges
// in ascending order.
struct ThetaPartition {
  std::vector<std::vector<EdgeId>> classes;
  std::vector<int> class_of;

  int class_count() const { return static_cast<int>(classes.size()); }
};

namespace theta_detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace theta_detail

inline ThetaPartition theta_star_classes(const Graph& g, const DistanceMatrix& d) {
  require_connected(d, "theta_star_classes");
  const int m = g.size();
  theta_detail::UnionFind uf(m);
  for (EdgeId i = 0; i < m; ++i)
    for (EdgeId j = i + 1; j < m; ++j)
      if (uf.find(i) != uf.find(j) && theta_related(g, d, i, j)) uf.unite(i, j);

  ThetaPartition out;
  out.class_of.assign(m, -1);
  std::vector<int> id_of_root(m, -1);
  for (EdgeId e = 0; e < m; ++e) {
    const int root = uf.find(e);
    if (id_of_root[root] < 0) {
      id_of_root[root] = out.class_count();
      out.classes.emplace_back();
    }
    out.class_of[e] = id_of_root[root];
    out.classes[id_of_root[root]].push_back(e);
  }
  return out;
}

inline ThetaPartition theta_star_classes(const Graph& g) { return theta_star_classes(g, bfs_distances(g)); }

// Per-vertex bit labels; bit i records on which side of theta class i the
// vertex lies. Vertex 0 is labelled all zeros.
struct HypercubeLabeling {
  int dim = 0;
  std::vector<std::vector<std::uint64_t>> labels;

  bool bit(Vertex v, int i) const { return (labels[v][i / 64] >> (i % 64)) & 1U; }

  int hamming(Vertex u, Vertex v) const {
    int total = 0;
    for (std::size_t w = 0; w < labels[u].size(); ++w) total += std::popcount(labels[u][w] ^ labels[v][w]);
    return total;
  }

  // Bit i has weight 2^i; the string has ceil(dim/4) digits (at least one),
  // most significant first.
  std::string hex(Vertex v) const {
    const int digits = std::max(1, (dim + 3) / 4);
    std::string out(digits, '0');
    for (int k = 0; k < digits; ++k) {
      int nibble = 0;
      for (int b = 0; b < 4; ++b) {
        const int i = 4 * k + b;
        if (i < dim && bit(v, i)) nibble |= 1 << b;
      }
      out[digits - 1 - k] = "0123456789abcdef"[nibble];
    }
    return out;
  }
};

struct DisconnectedWitness {
  Vertex unreachable = 0;  // not reachable from vertex 0
};
struct OddCycleWitness {
  std::vector<Vertex> cycle;
};
// e ~ f and f ~ h but not e ~ h.
struct TransitivityWitness {
  EdgeId e = 0, f = 0, h = 0;
};
struct HammingWitness {
  Vertex u = 0, v = 0;
  int hamming = 0;
  int distance = 0;
};

using RejectionWitness = std::variant<DisconnectedWitness, OddCycleWitness, TransitivityWitness, HammingWitness>;

inline std::string describe(const RejectionWitness& w, const Graph& g) {
  struct Visitor {
    const Graph& g;
    std::string operator()(const DisconnectedWitness& x) const {
      return "disconnected: vertex " + std::to_string(x.unreachable) + " unreachable from 0";
    }
    std::string operator()(const OddCycleWitness& x) const {
      std::string s = "odd cycle of length " + std::to_string(x.cycle.size()) + ":";
      for (Vertex v : x.cycle) s += " " + std::to_string(v);
      return s;
    }
    std::string operator()(const TransitivityWitness& x) const {
      return "theta not transitive: " + to_string(g.edge(x.e)) + " ~ " + to_string(g.edge(x.f)) + " ~ " +
             to_string(g.edge(x.h)) + " but " + to_string(g.edge(x.e)) + " !~ " + to_string(g.edge(x.h));
    }
    std::string operator()(const HammingWitness& x) const {
      return "labels of " + std::to_string(x.u) + "," + std::to_string(x.v) + " differ in " +
             std::to_string(x.hamming) + " bits but distance is " + std::to_string(x.distance);
    }
  };
  return std::visit(Visitor{g}, w);
}

struct PartialCubeVerdict {
  bool is_partial_cube = false;
  std::optional<HypercubeLabeling> labeling;  // set iff is_partial_cube
  std::optional<RejectionWitness> witness;    // set iff !is_partial_cube
  std::optional<ThetaPartition> classes;      // set when the graph was connected and bipartite
};

namespace theta_detail {

// Labels every vertex by its side of each class's representative edge.
inline HypercubeLabeling label_by_classes(const Graph& g, const DistanceMatrix& d, const ThetaPartition& tp) {
  HypercubeLabeling lab;
  lab.dim = tp.class_count();
  const int words = std::max(1, (lab.dim + 63) / 64);
  lab.labels.assign(g.order(), std::vector<std::uint64_t>(words, 0));
  for (int c = 0; c < lab.dim; ++c) {
    const Edge& rep = g.edge(tp.classes[c].front());
    const bool zero_side = d(rep.u, 0) < d(rep.v, 0);
    for (Vertex w = 0; w < g.order(); ++w) {
      const bool side = d(rep.u, w) < d(rep.v, w);
      if (side != zero_side) lab.labels[w][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  return lab;
}

// Shortest chain e = p0 ~ p1 ~ ... ~ pk = h inside one class, for k >= 2; the
// first three links form the witness since p0 !~ p2 by minimality.
inline TransitivityWitness transitivity_witness(const Graph& g, const DistanceMatrix& d,
                                                const std::vector<EdgeId>& cls, EdgeId e, EdgeId h) {
  std::vector<int> prev(g.size(), -2);
  std::vector<EdgeId> queue{e};
  prev[e] = -1;
  for (std::size_t head = 0; head < queue.size() && prev[h] == -2; ++head) {
    EdgeId x = queue[head];
    for (EdgeId y : cls)
      if (prev[y] == -2 && theta_related(g, d, x, y)) {
        prev[y] = x;
        queue.push_back(y);
      }
  }
  std::vector<EdgeId> chain;
  for (EdgeId x = h; x != -1; x = prev[x]) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return TransitivityWitness{chain[0], chain[1], chain[2]};
}

}  // namespace theta_detail

/// Winkler recognition: connected, bipartite, and theta transitive. A
/// positive answer carries a labeling that has been checked against every
/// pairwise distance. Rejections report the first failing test in the order
/// disconnected, odd cycle, transitivity, Hamming.
inline PartialCubeVerdict is_partial_cube(const Graph& g, const DistanceMatrix& d) {
  PartialCubeVerdict out;
  for (Vertex v = 1; v < g.order(); ++v)
    if (!d.reachable(0, v)) {
      out.witness = DisconnectedWitness{v};
      return out;
    }
  auto bip = is_bipartite(g);
  if (!bip.bipartite) {
    out.witness = OddCycleWitness{std::move(bip.odd_cycle)};
    return out;
  }
  ThetaPartition tp = theta_star_classes(g, d);
  for (const auto& cls : tp.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!theta_related(g, d, cls[i], cls[j])) {
          out.witness = theta_detail::transitivity_witness(g, d, cls, cls[i], cls[j]);
          out.classes = std::move(tp);
          return out;
        }
  HypercubeLabeling lab = theta_detail::label_by_classes(g, d, tp);
  out.classes = std::move(tp);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (lab.hamming(u, v) != d(u, v)) {
        out.witness = HammingWitness{u, v, lab.hamming(u, v), d(u, v)};
        return out;
      }
  out.is_partial_cube = true;
  out.labeling = std::move(lab);
  return out;
}

inline PartialCubeVerdict is_partial_cube(const Graph& g) { return is_partial_cube(g, bfs_distances(g)); }

// W_uv, W_vu, their boundaries U_uv, U_vu, and the cut F_uv for one edge.
struct HalfspaceDecomposition {
  Edge edge;
  std::vector<Vertex> w_uv, w_vu;
  std::vector<Vertex> u_uv, u_vu;
  std::vector<EdgeId> f_uv;
};

/// Halfspaces of edge e = uv (u < v). Throws PreconditionError when the two
/// sides fail to partition V or when the cut differs from the theta* class
/// of e, both of which mean g is not a partial cube.
inline HalfspaceDecomposition halfspaces(const Graph& g, const DistanceMatrix& d, EdgeId e) {
  require_connected(d, "halfspaces");
  HalfspaceDecomposition h;
  h.edge = g.edge(e);
  const Vertex u = h.edge.u, v = h.edge.v;
  std::vector<int> side(g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    if (d(u, w) == d(v, w))
      throw PreconditionError("halfspaces: vertex " + std::to_string(w) + " is equidistant from " +
                              to_string(h.edge) + "; not a partial cube");
    side[w] = d(u, w) < d(v, w) ? 0 : 1;
    (side[w] == 0 ? h.w_uv : h.w_vu).push_back(w);
  }
  const ThetaPartition tp = theta_star_classes(g, d);
  std::vector<char> boundary(g.order(), 0);
  for (EdgeId f = 0; f < g.size(); ++f) {
    const Edge& x = g.edge(f);
    const bool crossing = side[x.u] != side[x.v];
    if (crossing != (tp.class_of[f] == tp.class_of[e]))
      throw PreconditionError("halfspaces: cut of " + to_string(h.edge) + " differs from its theta* class at " +
                              to_string(x) + "; not a partial cube");
    if (crossing) {
      h.f_uv.push_back(f);
      boundary[x.u] = boundary[x.v] = 1;
    }
  }
  for (Vertex w : h.w_uv)
    if (boundary[w]) h.u_uv.push_back(w);
  for (Vertex w : h.w_vu)
    if (boundary[w]) h.u_vu.push_back(w);
  return h;
}

}  // namespace cubecheck
