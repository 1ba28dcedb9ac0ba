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
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"
#include "cubecheck/graph6.hpp"
#include "cubecheck/theta.hpp"

namespace cubecheck {

using Permutation = std::vector<Vertex>;

/// True iff p is a bijection of V(g) mapping edges to edges.
inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Vertex x : p) {
    if (x < 0 || x >= g.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

/// True iff m is a bijection V(g) -> V(h) with uv in E(g) <=> m(u)m(v) in E(h).
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& m) {
  if (g.order() != h.order() || g.size() != h.size() || static_cast<int>(m.size()) != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Vertex x : m) {
    if (x < 0 || x >= h.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!h.adjacent(m[e.u], m[e.v])) return false;
  return true;  // equal edge counts make the map onto E(h)
}

/// Orbit representative (least member) of every point under the group
/// generated by gens.
inline std::vector<int> orbit_representatives(int n, const std::vector<Permutation>& gens) {
  theta_detail::UnionFind uf(n);
  for (const auto& p : gens)
    for (int v = 0; v < n; ++v) uf.unite(v, p[v]);
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = uf.find(v);
  return rep;
}

/// Orbit representative (least edge id) of every edge.
inline std::vector<int> edge_orbit_representatives(const Graph& g, const std::vector<Permutation>& gens) {
  theta_detail::UnionFind uf(g.size());
  for (const auto& p : gens)
    for (EdgeId e = 0; e < g.size(); ++e) uf.unite(e, *g.edge_id(p[g.edge(e).u], p[g.edge(e).v]));
  std::vector<int> rep(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) rep[e] = uf.find(e);
  return rep;
}

namespace symmetry_detail {

// Vertex -> cell index; cells are numbered 0..k-1 by an isomorphism-invariant
// rule, so two graphs refined in lockstep get comparable colorings.
using Coloring = std::vector<int>;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 31;
  x *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (x ^ (x >> 29));
}

// Iterated neighbor-color counting down to the coarsest equitable partition
// finer than c. Returns a hash of every round's cell signatures.
inline std::uint64_t refine(const Graph& g, Coloring& c) {
  const int n = g.order();
  std::uint64_t trace = 0;
  int cells = n == 0 ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  std::vector<std::vector<int>> key(n);
  std::vector<int> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& k = key[v];
      k.clear();
      k.push_back(c[v]);
      for (Vertex w : g.neighbors(v)) k.push_back(c[w]);
      std::sort(k.begin() + 1, k.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
    int next = -1;
    Coloring fresh(n);
    for (int i = 0; i < n; ++i) {
      if (i == 0 || key[order[i]] != key[order[i - 1]]) {
        ++next;
        for (int x : key[order[i]]) trace = mix(trace, static_cast<std::uint64_t>(x) + 1);
        trace = mix(trace, 0);
      }
      fresh[order[i]] = next;
    }
    trace = mix(trace, static_cast<std::uint64_t>(next) + 7);
    c.swap(fresh);
    if (next + 1 == cells) return trace;
    cells = next + 1;
  }
}

// Splits v off the front of its cell.
inline Coloring individualize(const Coloring& c, Vertex v) {
  Coloring out(c);
  const int k = c[v];
  for (std::size_t u = 0; u < c.size(); ++u)
    if (c[u] > k || (c[u] == k && static_cast<Vertex>(u) != v)) ++out[u];
  return out;
}

inline int cell_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

inline bool discrete(const Coloring& c) { return cell_count(c) == static_cast<int>(c.size()); }

// First non-singleton cell, or -1.
inline int target_cell(const Coloring& c) {
  std::vector<int> size(cell_count(c), 0);
  for (int x : c) ++size[x];
  for (std::size_t k = 0; k < size.size(); ++k)
    if (size[k] > 1) return static_cast<int>(k);
  return -1;
}

// Depth-first search for an isomorphism g -> h respecting equitable
// colorings cg and ch. Candidates in h are tried in ascending vertex order.
inline bool match(const Graph& g, const Graph& h, const Coloring& cg, const Coloring& ch, std::vector<Vertex>& out) {
  const int t = target_cell(cg);
  if (t < 0) {
    out.assign(g.order(), -1);
    std::vector<Vertex> by_color(h.order());
    for (Vertex u = 0; u < h.order(); ++u) by_color[ch[u]] = u;
    for (Vertex v = 0; v < g.order(); ++v) out[v] = by_color[cg[v]];
    return is_isomorphism(g, h, out);
  }
  Vertex v = 0;
  while (cg[v] != t) ++v;
  Coloring ng = individualize(cg, v);
  const std::uint64_t tg = refine(g, ng);
  for (Vertex u = 0; u < h.order(); ++u) {
    if (ch[u] != t) continue;
    Coloring nh = individualize(ch, u);
    if (refine(h, nh) != tg) continue;
    if (match(g, h, ng, nh, out)) return true;
  }
  return false;
}

inline bool checked_multiply(std::uint64_t& acc, std::uint64_t x) {
  return !__builtin_mul_overflow(acc, x, &acc);
}

}  // namespace symmetry_detail

struct AutomorphismReport {
  std::vector<Permutation> generators;
  std::uint64_t group_order = 1;
  std::vector<Vertex> orbit_of_0;
  std::uint64_t stabilizer_order_of_0 = 1;
};

/// Automorphism group by a stabilizer chain with base point 0 first: at
/// each level every candidate image of the base point is either reached by
/// known generators or settled by an exact search. The group order is the
/// product of the basic orbit lengths. Throws Error if it overflows 64 bits.
inline AutomorphismReport automorphisms(const Graph& g) {
  using namespace symmetry_detail;
  AutomorphismReport rep;
  const int n = g.order();
  if (n == 0) return rep;
  Coloring c(n, 0);
  refine(g, c);
  std::vector<Vertex> prefix;
  bool first_level = true;
  while (true) {
    Vertex base;
    if (first_level) {
      base = 0;
    } else {
      const int t = target_cell(c);
      if (t < 0) break;
      base = 0;
      while (c[base] != t) ++base;
    }
    Coloring cb = individualize(c, base);
    const std::uint64_t tb = refine(g, cb);

    // Generators fixing the prefix pointwise stabilize this level.
    std::vector<Permutation> level_gens;
    for (const auto& p : rep.generators) {
      bool fixes = true;
      for (Vertex x : prefix) fixes = fixes && p[x] == x;
      if (fixes) level_gens.push_back(p);
    }
    std::vector<Vertex> orbit;
    for (Vertex w = 0; w < n; ++w) {
      if (c[w] != c[base]) continue;
      auto reps = orbit_representatives(n, level_gens);
      if (reps[w] == reps[base]) continue;
      Coloring cw = individualize(c, w);
      if (refine(g, cw) != tb) continue;
      Permutation p;
      if (match(g, g, cb, cw, p)) {
        rep.generators.push_back(p);
        level_gens.push_back(p);
      }
    }
    auto reps = orbit_representatives(n, level_gens);
    for (Vertex w = 0; w < n; ++w)
      if (reps[w] == reps[base]) orbit.push_back(w);
    if (!checked_multiply(rep.group_order, orbit.size()))
      throw Error("automorphisms: group order exceeds 64 bits");
    if (first_level) {
      rep.orbit_of_0 = orbit;
    } else if (!checked_multiply(rep.stabilizer_order_of_0, orbit.size())) {
      throw Error("automorphisms: stabilizer order exceeds 64 bits");
    }
    prefix.push_back(base);
    c = std::move(cb);
    first_level = false;
  }
  return rep;
}

/// Orbit of vertex 0 only; cheaper than the full chain.
inline std::vector<Vertex> orbit_of_vertex_0(const Graph& g) {
  using namespace symmetry_detail;
  const int n = g.order();
  if (n == 0) return {};
  Coloring c(n, 0);
  refine(g, c);
  Coloring c0 = individualize(c, 0);
  const std::uint64_t t0 = refine(g, c0);
  std::vector<Permutation> gens;
  for (Vertex w = 1; w < n; ++w) {
    if (c[w] != c[0]) continue;
    auto reps = orbit_representatives(n, gens);
    if (reps[w] == reps[0]) continue;
    Coloring cw = individualize(c, w);
    if (refine(g, cw) != t0) continue;
    Permutation p;
    if (match(g, g, c0, cw, p)) gens.push_back(std::move(p));
  }
  auto reps = orbit_representatives(n, gens);
  std::vector<Vertex> orbit;
  for (Vertex w = 0; w < n; ++w)
    if (reps[w] == reps[0]) orbit.push_back(w);
  return orbit;
}

inline bool is_vertex_transitive(const Graph& g) {
  return static_cast<int>(orbit_of_vertex_0(g).size()) == g.order();
}

inline bool has_trivial_stabilizers(const Graph& g) { return automorphisms(g).stabilizer_order_of_0 == 1; }

// Either a verified isomorphism or the first invariant that differs.
struct IsoCertificate {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // g-vertex -> h-vertex when isomorphic
  std::string refutation;       // empty when isomorphic
};

namespace symmetry_detail {

inline std::map<int, long long> distance_distribution(const Graph& g) {
  const DistanceMatrix d = bfs_distances(g);
  std::map<int, long long> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) ++out[d.reachable(u, v) ? int{d(u, v)} : -1];
  return out;
}

inline std::vector<int> class_sizes(const Graph& g) {
  const ThetaPartition tp = theta_star_classes(g);
  std::vector<int> out;
  for (const auto& cls : tp.classes) out.push_back(static_cast<int>(cls.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symmetry_detail

/// Isomorphism test. Cheap invariants are compared first (order, size,
/// degree sequence, distance distribution, theta class sizes for connected
/// graphs) and the first mismatch is reported; otherwise a refinement-guided
/// search either yields a verified mapping or proves there is none.
inline IsoCertificate is_isomorphic(const Graph& g, const Graph& h) {
  using namespace symmetry_detail;
  IsoCertificate cert;
  if (g.order() != h.order()) {
    cert.refutation = "order " + std::to_string(g.order()) + " vs " + std::to_string(h.order());
    return cert;
  }
  if (g.size() != h.size()) {
    cert.refutation = "size " + std::to_string(g.size()) + " vs " + std::to_string(h.size());
    return cert;
  }
  if (degree_sequence(g) != degree_sequence(h)) {
    cert.refutation = "degree sequence";
    return cert;
  }
  if (distance_distribution(g) != distance_distribution(h)) {
    cert.refutation = "distance distribution";
    return cert;
  }
  if (g.order() > 0 && is_connected(g) && class_sizes(g) != class_sizes(h)) {
    cert.refutation = "theta class sizes";
    return cert;
  }
  Coloring cg(g.order(), 0), ch(h.order(), 0);
  if (refine(g, cg) != refine(h, ch) || !match(g, h, cg, ch, cert.mapping)) {
    cert.mapping.clear();
    cert.refutation = "no isomorphism (exhaustive search)";
    return cert;
  }
  cert.isomorphic = true;
  return cert;
}

// A canonical relabeling: isomorphic graphs get identical `graph6`.
struct CanonicalForm {
  std::vector<Vertex> labeling;  // original vertex -> canonical index
  std::string graph6;
  std::vector<Permutation> generators;  // automorphisms met during the search
};

namespace symmetry_detail {

struct CanonicalSearch {
  const Graph& g;
  std::vector<int> first_cert, best_cert;
  Coloring first_lab, best_lab;
  std::vector<Permutation> gens;
  std::vector<Vertex> prefix;

  std::vector<int> certificate(const Coloring& lab) const {
    std::vector<int> out;
    out.reserve(2 * g.size());
    std::vector<std::pair<int, int>> es;
    es.reserve(g.size());
    for (const Edge& e : g.edges()) es.emplace_back(std::min(lab[e.u], lab[e.v]), std::max(lab[e.u], lab[e.v]));
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }

  void record_automorphism(const Coloring& target, const Coloring& lab) {
    std::vector<Vertex> inv(g.order());
    for (Vertex v = 0; v < g.order(); ++v) inv[target[v]] = v;
    Permutation p(g.order());
    for (Vertex v = 0; v < g.order(); ++v) p[v] = inv[lab[v]];
    gens.push_back(std::move(p));
  }

  void leaf(const Coloring& lab) {
    auto cert = certificate(lab);
    if (first_lab.empty()) {
      first_cert = best_cert = cert;
      first_lab = best_lab = lab;
    } else if (cert == first_cert) {
      record_automorphism(first_lab, lab);
    } else if (cert == best_cert) {
      record_automorphism(best_lab, lab);
    } else if (cert > best_cert) {
      best_cert = std::move(cert);
      best_lab = lab;
    }
  }

  void run(const Coloring& c) {
    const int t = target_cell(c);
    if (t < 0) {
      leaf(c);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (c[w] != t) continue;
      if (!explored.empty()) {
        std::vector<Permutation> fixing;
        for (const auto& p : gens) {
          bool ok = true;
          for (Vertex x : prefix) ok = ok && p[x] == x;
          if (ok) fixing.push_back(p);
        }
        auto reps = orbit_representatives(g.order(), fixing);
        bool seen = false;
        for (Vertex x : explored) seen = seen || reps[x] == reps[w];
        if (seen) continue;
      }
      explored.push_back(w);
      Coloring cw = individualize(c, w);
      refine(g, cw);
      prefix.push_back(w);
      run(cw);
      prefix.pop_back();
    }
  }
};

}  // namespace symmetry_detail

/// Canonical labeling by exhaustive search over the individualization tree,
/// keeping the leaf with the greatest sorted relabeled edge list and pruning
/// children equivalent under automorphisms found so far.
inline CanonicalForm canonical_form(const Graph& g) {
  using namespace symmetry_detail;
  CanonicalForm out;
  if (g.order() == 0) {
    out.graph6 = write_graph6(g);
    return out;
  }
  CanonicalSearch search{g, {}, {}, {}, {}, {}, {}};
  Coloring c(g.order(), 0);
  refine(g, c);
  search.run(c);
  out.labeling = search.best_lab;
  out.graph6 = write_graph6(relabel(g, out.labeling));
  out.generators = std::move(search.gens);
  return out;
}

}  // namespace cubecheck
