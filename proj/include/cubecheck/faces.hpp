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
#include <string>
#include <vector>

#include "cubecheck/cycles.hpp"
#include "cubecheck/distance.hpp"
#include "cubecheck/graph.hpp"

namespace cubecheck {

namespace faces_detail {

inline int shared_edges(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  int n = 0;
  for (EdgeId e : a)
    if (std::find(b.begin(), b.end(), e) != b.end()) ++n;
  return n;
}

inline int shared_vertices(const CycleRecord& a, const CycleRecord& b) {
  int n = 0;
  for (Vertex v : a.vertices)
    if (b.contains(v)) ++n;
  return n;
}

inline std::string cycle_text(const CycleRecord& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? "," : "") + std::to_string(c.vertices[i]);
  return s + "]";
}

}  // namespace faces_detail

// Face counts of a cubic graph whose 4-cycles and convex 6-cycles are taken
// as the faces of a closed surface.
struct EulerReport {
  int n = 0, e = 0;
  int f4 = 0, f6 = 0, f = 0;
  int chi = 0;
  bool edges_match = false;   // 3n == 2e
  bool squares_match = false; // 4 f4 == n
  bool hexagons_match = false;// 3 f6 == n
  bool chi_matches = false;   // 12 chi == n
};

/// Counts faces by enumeration, then evaluates chi = n - e + f. Requires
/// girth signature (4,6,6) and that no two of the counted cycles share more
/// than one edge; violations throw PreconditionError naming the cause.
inline EulerReport euler_report(const Graph& g, const DistanceMatrix& d) {
  require_connected(d, "euler_report");
  const GirthSignature sig = girth_signature(g, d);
  if (sig.global != GirthSignature::Triple{4, 6, 6} || !sig.constant)
    throw PreconditionError("euler_report: girth signature is " + to_string(sig.global) + ", need (4,6,6)");

  std::vector<CycleRecord> faces = cycles_of_length(g, 4);
  for (auto& c : isometric_cycles_of_length(g, d, 6))
    if (is_convex_subgraph(g, d, c.vertices)) faces.push_back(c);
  std::vector<std::vector<EdgeId>> edge_sets;
  for (const auto& c : faces) {
    auto es = c.edge_ids(g);
    std::sort(es.begin(), es.end());
    edge_sets.push_back(std::move(es));
  }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (faces_detail::shared_edges(edge_sets[i], edge_sets[j]) > 1)
        throw PreconditionError("euler_report: cycles " + faces_detail::cycle_text(faces[i]) + " and " +
                                faces_detail::cycle_text(faces[j]) + " share more than one edge");

  EulerReport r;
  r.n = g.order();
  r.e = g.size();
  for (const auto& c : faces) (c.length() == 4 ? r.f4 : r.f6) += 1;
  r.f = r.f4 + r.f6;
  r.chi = r.n - r.e + r.f;
  r.edges_match = 3 * r.n == 2 * r.e;
  r.squares_match = 4 * r.f4 == r.n;
  r.hexagons_match = 3 * r.f6 == r.n;
  r.chi_matches = 12 * r.chi == r.n;
  return r;
}

inline EulerReport euler_report(const Graph& g) { return euler_report(g, bfs_distances(g)); }

// One failed check of the cycle audit.
struct AuditViolation {
  enum class Kind { NonConvexSquare, NotIntertwined, SquareOverlap };
  Kind kind;
  CycleRecord first;
  CycleRecord second;  // empty for NonConvexSquare
};

inline std::string to_string(AuditViolation::Kind k) {
  switch (k) {
    case AuditViolation::Kind::NonConvexSquare: return "non-convex 4-cycle";
    case AuditViolation::Kind::NotIntertwined: return "overlapping convex cycles do not intertwine";
    case AuditViolation::Kind::SquareOverlap: return "4-cycle shares two or more edges with a convex cycle";
  }
  return "?";
}

struct ClaimsAudit {
  int squares = 0;
  int convex_cycles = 0;
  int overlapping_pairs = 0;  // convex pairs meeting in more than an edge or a vertex
  std::vector<AuditViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Audits three statements on the convex cycles up to max_len: every 4-cycle
/// is convex; convex cycles meeting in three or more vertices intertwine;
/// no 4-cycle shares two edges with another convex cycle.
inline ClaimsAudit claims_audit(const Graph& g, const DistanceMatrix& d, int max_len) {
  require_connected(d, "claims_audit");
  ClaimsAudit out;
  for (const auto& sq : cycles_of_length(g, 4)) {
    ++out.squares;
    if (!is_convex_subgraph(g, d, sq.vertices))
      out.violations.push_back({AuditViolation::Kind::NonConvexSquare, sq, {}});
  }
  const auto cycles = enumerate_convex_cycles(g, d, max_len);
  out.convex_cycles = static_cast<int>(cycles.size());
  std::vector<std::vector<EdgeId>> edge_sets;
  for (const auto& c : cycles) {
    auto es = c.edge_ids(g);
    std::sort(es.begin(), es.end());
    edge_sets.push_back(std::move(es));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (faces_detail::shared_vertices(cycles[i], cycles[j]) < 3) continue;
      ++out.overlapping_pairs;
      if (!intertwining(cycles[i], cycles[j]))
        out.violations.push_back({AuditViolation::Kind::NotIntertwined, cycles[i], cycles[j]});
      if ((cycles[i].length() == 4 || cycles[j].length() == 4) &&
          faces_detail::shared_edges(edge_sets[i], edge_sets[j]) >= 2)
        out.violations.push_back({AuditViolation::Kind::SquareOverlap, cycles[i], cycles[j]});
    }
  return out;
}

inline ClaimsAudit claims_audit(const Graph& g, const DistanceMatrix& d) {
  return claims_audit(g, d, default_max_cycle_len(d));
}

}  // namespace cubecheck
