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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cubecheck/graph.hpp"

namespace cubecheck {

// a + b*sqrt(5) with rational a, b. boost::rational keeps both reduced, so
// equal numbers have equal representations.
struct QSqrt5 {
  using Q = boost::rational<std::int64_t>;
  Q a{0}, b{0};

  QSqrt5() = default;
  QSqrt5(Q a_, Q b_) : a(a_), b(b_) {}
  explicit QSqrt5(std::int64_t x) : a(x) {}

  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt5 operator-(const QSqrt5& x) { return {-x.a, -x.b}; }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  // The golden ratio (1 + sqrt5) / 2.
  static QSqrt5 phi() { return {Q(1, 2), Q(1, 2)}; }
};

// Rank-3 Coxeter matrix given by its three off-diagonal orders.
struct CoxeterMatrix {
  int m12 = 2, m23 = 2, m13 = 2;

  int at(int i, int j) const {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 1 ? m12 : m13;
    return m23;
  }
};

inline constexpr CoxeterMatrix kA3{3, 3, 2};
inline constexpr CoxeterMatrix kB3{4, 3, 2};
inline constexpr CoxeterMatrix kH3{5, 3, 2};

using GroupElement = std::array<std::array<QSqrt5, 3>, 3>;

struct CoxeterCayley {
  Graph graph;
  std::vector<std::string> words;  // shortest word per vertex over r, g, b; "e" for the identity
  std::vector<GroupElement> elements;
};

namespace coxeter_detail {

inline GroupElement identity() {
  GroupElement m;
  for (int i = 0; i < 3; ++i) m[i][i] = QSqrt5(1);
  return m;
}

inline GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  GroupElement out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = out[i][j] + x[i][k] * y[k][j];
  return out;
}

// Off-diagonal Cartan entries (a_ij, a_ji) with a_ij * a_ji = 4 cos^2(pi/m).
// For m = 4 and m = 6 the entries are unequal integers, which keeps B3 and
// G2-type factors inside Q(sqrt5) without needing sqrt2 or sqrt3.
inline std::pair<QSqrt5, QSqrt5> cartan_pair(int m) {
  switch (m) {
    case 2: return {QSqrt5(0), QSqrt5(0)};
    case 3: return {QSqrt5(-1), QSqrt5(-1)};
    case 4: return {QSqrt5(-1), QSqrt5(-2)};
    case 5: return {-QSqrt5::phi(), -QSqrt5::phi()};
    case 6: return {QSqrt5(-1), QSqrt5(-3)};
    default:
      throw PreconditionError("coxeter_cayley: order " + std::to_string(m) + " not supported (need 2..6)");
  }
}

// Reflection s_i in the root basis: s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline std::array<GroupElement, 3> reflections(const CoxeterMatrix& cm) {
  std::array<std::array<QSqrt5, 3>, 3> cartan;
  for (int i = 0; i < 3; ++i) cartan[i][i] = QSqrt5(2);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto [aij, aji] = cartan_pair(cm.at(i, j));
      cartan[i][j] = aij;
      cartan[j][i] = aji;
    }
  std::array<GroupElement, 3> s;
  for (int i = 0; i < 3; ++i) {
    s[i] = identity();
    for (int j = 0; j < 3; ++j) s[i][i][j] = s[i][i][j] - cartan[i][j];
  }
  return s;
}

}  // namespace coxeter_detail

/// Cayley graph of a finite rank-3 Coxeter group on its three simple
/// reflections r, g, b (orders m12 between r and g, m23 between g and b,
/// m13 between r and b). Elements are exact matrices over Q(sqrt5),
/// discovered breadth-first from the identity by right multiplication in
/// generator order; vertex 0 is the identity. Throws PreconditionError when
/// the group has more than element_cap elements or when every order is at
/// least 3 (such groups are infinite).
inline CoxeterCayley coxeter_cayley(const CoxeterMatrix& cm, int element_cap = 10000) {
  for (int m : {cm.m12, cm.m23, cm.m13})
    if (m < 2) throw PreconditionError("coxeter_cayley: orders must be at least 2");
  if (cm.m12 >= 3 && cm.m23 >= 3 && cm.m13 >= 3)
    throw PreconditionError("coxeter_cayley: presumed infinite (all three orders are at least 3)");
  const auto gens = coxeter_detail::reflections(cm);
  static constexpr const char* kNames[3] = {"r", "g", "b"};

  CoxeterCayley out;
  std::map<GroupElement, int> index;
  out.elements.push_back(coxeter_detail::identity());
  out.words.push_back("e");
  index.emplace(out.elements[0], 0);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (int i = 0; i < 3; ++i) {
      GroupElement next = coxeter_detail::multiply(out.elements[head], gens[i]);
      auto [it, fresh] = index.emplace(next, static_cast<int>(out.elements.size()));
      if (fresh) {
        if (static_cast<int>(out.elements.size()) >= element_cap)
          throw PreconditionError("coxeter_cayley: presumed infinite or too large (more than " +
                                  std::to_string(element_cap) + " elements)");
        out.elements.push_back(std::move(next));
        out.words.push_back(head == 0 ? std::string(kNames[i]) : out.words[head] + kNames[i]);
      }
      if (static_cast<int>(head) < it->second) es.emplace_back(static_cast<Vertex>(head), it->second);
    }
  }
  out.graph = build_graph(static_cast<int>(out.elements.size()), es);
  return out;
}

inline Graph cubic_permutahedron() { return coxeter_cayley(kA3).graph; }
inline Graph truncated_cuboctahedron() { return coxeter_cayley(kB3).graph; }
inline Graph truncated_icosidodecahedron() { return coxeter_cayley(kH3).graph; }

}  // namespace cubecheck
