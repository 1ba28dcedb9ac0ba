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

#include <gtest/gtest.h>

#include "support.hpp"

namespace cubecheck {
namespace {

using namespace cubecheck::testing;

int girth(const Graph& g) {
  for (int len = 3; len <= g.order(); ++len)
    if (!oracle_cycles(g, len).empty()) return len;
  return 0;
}

TEST(Families, CubeIsPrismFour) { EXPECT_TRUE(is_isomorphic(hypercube(3), prism(4)).isomorphic); }

TEST(Families, PrismSix) {
  Graph g = prism(6);
  EXPECT_EQ(g.order(), 12);
  EXPECT_TRUE(is_cubic(g));
  EXPECT_TRUE(is_partial_cube(g).is_partial_cube);
}

TEST(Families, OddCycleIsNotAPartialCube) { EXPECT_FALSE(is_partial_cube(cycle(5)).is_partial_cube); }

TEST(Families, ParameterChecks) {
  EXPECT_THROW(cycle(2), PreconditionError);
  EXPECT_THROW(hypercube(0), PreconditionError);
  EXPECT_THROW(hypercube(21), PreconditionError);
  EXPECT_THROW(prism(2), PreconditionError);
  EXPECT_THROW(generalized_petersen(10, 5), PreconditionError);
  EXPECT_THROW(generalized_petersen(2, 1), PreconditionError);
  EXPECT_THROW(generalized_petersen(10, 0), PreconditionError);
  EXPECT_THROW(middle_levels(0), PreconditionError);
  EXPECT_THROW(middle_levels(11), PreconditionError);
}

TEST(GeneralizedPetersen, Desargues) {
  Graph g = generalized_petersen(10, 3);
  EXPECT_EQ(g.order(), 20);
  EXPECT_EQ(g.size(), 30);
  EXPECT_EQ(girth(g), 6);
  EXPECT_TRUE(is_partial_cube(g).is_partial_cube);
}

TEST(GeneralizedPetersen, SmallCases) {
  EXPECT_TRUE(is_isomorphic(generalized_petersen(4, 1), hypercube(3)).isomorphic);
  EXPECT_FALSE(is_bipartite(generalized_petersen(5, 2)).bipartite);
}

TEST(MiddleLevels, SmallCases) {
  EXPECT_EQ(middle_levels(1), complete_k2());
  EXPECT_TRUE(is_isomorphic(middle_levels(2), cycle(6)).isomorphic);
  EXPECT_TRUE(is_isomorphic(middle_levels(3), generalized_petersen(10, 3)).isomorphic);
  Graph m4 = middle_levels(4);
  EXPECT_EQ(m4.order(), 70);
  for (Vertex v = 0; v < m4.order(); ++v) EXPECT_EQ(m4.degree(v), 4);
  EXPECT_TRUE(is_partial_cube(m4).is_partial_cube);
}

TEST(GraphX, Shape) {
  Graph x = graph_x();
  EXPECT_EQ(girth(x), 6);
  EXPECT_FALSE(is_vertex_transitive(x));
  EXPECT_EQ(graph_x_names()[8], "c1");
  EXPECT_TRUE(x.adjacent(8, 3) && x.adjacent(8, 7) && x.adjacent(9, 1) && x.adjacent(9, 5));
}

TEST(Coxeter, PermutahedronMatchesS4Transpositions) {
  auto c = coxeter_cayley(kA3);
  EXPECT_EQ(c.graph.order(), 24);
  EXPECT_TRUE(is_isomorphic(c.graph, s4_adjacent_transpositions()).isomorphic);
  EXPECT_EQ(c.words[0], "e");
}

TEST(Coxeter, OrdersAndShapes) {
  Graph b3 = coxeter_cayley(kB3).graph;
  EXPECT_EQ(b3.order(), 48);
  Graph h3 = coxeter_cayley(kH3).graph;
  EXPECT_EQ(h3.order(), 120);
  for (const Graph& g : {b3, h3}) {
    EXPECT_TRUE(is_cubic(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_vertex_transitive(g));
    EXPECT_TRUE(is_partial_cube(g).is_partial_cube);
  }
}

// Finite reducible and dihedral-type cases have the expected orders.
TEST(Coxeter, ReducibleGroups) {
  EXPECT_EQ(coxeter_cayley({2, 2, 2}).graph.order(), 8);    // A1^3: Q3
  EXPECT_TRUE(is_isomorphic(coxeter_cayley({2, 2, 2}).graph, hypercube(3)).isomorphic);
  EXPECT_EQ(coxeter_cayley({3, 2, 2}).graph.order(), 12);   // A2 x A1
  EXPECT_EQ(coxeter_cayley({4, 2, 2}).graph.order(), 16);   // B2 x A1
  EXPECT_EQ(coxeter_cayley({5, 2, 2}).graph.order(), 20);   // H2 x A1
  EXPECT_EQ(coxeter_cayley({6, 2, 2}).graph.order(), 24);   // G2 x A1
  EXPECT_TRUE(is_isomorphic(coxeter_cayley({6, 2, 2}).graph, prism(12)).isomorphic);
}

TEST(Coxeter, InfiniteGroupsAbort) {
  EXPECT_THROW(coxeter_cayley({3, 3, 3}), Error);            // affine A2
  EXPECT_THROW(coxeter_cayley({4, 4, 2}, 500), Error);       // affine C2
  EXPECT_THROW(coxeter_cayley(kH3, 100), Error);             // cap below |H3|
}

TEST(Coxeter, LoopFreeRegularAndExact) {
  for (const auto& cm : {kA3, kB3, kH3}) {
    auto c = coxeter_cayley(cm);
    for (Vertex v = 0; v < c.graph.order(); ++v) EXPECT_EQ(c.graph.degree(v), 3);
    // Elements are pairwise distinct and the identity comes first.
    std::set<GroupElement> distinct(c.elements.begin(), c.elements.end());
    EXPECT_EQ(distinct.size(), c.elements.size());
    EXPECT_TRUE(c.elements[0] == coxeter_detail::identity());
    // Each generator is an involution distinct from the identity.
    const auto s = coxeter_detail::reflections(cm);
    for (const auto& r : s) {
      EXPECT_FALSE(r == coxeter_detail::identity());
      EXPECT_TRUE(coxeter_detail::multiply(r, r) == coxeter_detail::identity());
    }
  }
}

TEST(Coxeter, GoldenRatioArithmetic) {
  const QSqrt5 phi = QSqrt5::phi();
  // phi^2 = phi + 1.
  EXPECT_TRUE(phi * phi == phi + QSqrt5(1));
}

TEST(Coxeter, WrappersAgree) {
  EXPECT_EQ(cubic_permutahedron(), coxeter_cayley(kA3).graph);
  EXPECT_EQ(truncated_cuboctahedron(), coxeter_cayley(kB3).graph);
  EXPECT_EQ(truncated_icosidodecahedron(), coxeter_cayley(kH3).graph);
}

TEST(Families, Deterministic) {
  EXPECT_EQ(generalized_petersen(10, 3), generalized_petersen(10, 3));
  EXPECT_EQ(middle_levels(3), middle_levels(3));
  EXPECT_EQ(truncated_icosidodecahedron(), truncated_icosidodecahedron());
  EXPECT_EQ(prism(9), prism(9));
}

// Every member of the classified families is connected, cubic, bipartite,
// a partial cube and vertex-transitive.
TEST(Families, TheoremFamiliesPassAllGates) {
  std::vector<Graph> family{hypercube(3), generalized_petersen(10, 3), cubic_permutahedron(),
                            truncated_cuboctahedron(), truncated_icosidodecahedron()};
  for (int n = 2; n <= 10; ++n) family.push_back(prism(2 * n));
  for (const Graph& g : family) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_cubic(g));
    EXPECT_TRUE(is_bipartite(g).bipartite);
    EXPECT_TRUE(is_partial_cube(g).is_partial_cube);
    EXPECT_TRUE(is_vertex_transitive(g));
  }
}

}  // namespace
}  // namespace cubecheck
