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
#include <sys/wait.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "support.hpp"

namespace cubecheck {
namespace {

using namespace cubecheck::testing;
using nlohmann::json;

struct Run {
  std::string out;
  int code = -1;
};

// Runs `stdin_text | cubecheck args`; stderr is folded into out when asked.
Run run(const std::string& args, const std::string& stdin_text = "", bool with_stderr = false) {
  std::string cmd = "printf '%s' '" + stdin_text + "' | '" CUBECHECK_CLI_PATH "' " + args;
  if (with_stderr) cmd += " 2>&1";
  else cmd += " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

TEST(Generate, NamedFamilies) {
  auto r = run("generate gp 10 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(is_isomorphic(parse_graph6(trimmed(r.out)), generalized_petersen(10, 3)).isomorphic);
  r = run("generate prism 6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph6(trimmed(r.out)), prism(6));
  r = run("generate coxeter 5 3 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(is_isomorphic(parse_graph6(trimmed(r.out)), truncated_icosidodecahedron()).isomorphic);
  r = run("generate permutahedron");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph6(trimmed(r.out)), cubic_permutahedron());
}

TEST(Generate, MetaSidecar) {
  auto r = run("generate prism 6 --meta");
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(parse_graph6(ls[0]), prism(6));
  json meta = json::parse(ls[1]);
  EXPECT_EQ(meta["order"], 12);
  EXPECT_EQ(meta["size"], 18);
  EXPECT_EQ(meta["vertices"].size(), 12u);
}

TEST(Generate, UsageErrors) {
  EXPECT_EQ(run("generate bogus 1").code, 2);
  EXPECT_EQ(run("generate").code, 2);
  EXPECT_EQ(run("generate gp 10 5").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Recognize, DesarguesJson) {
  const std::string g6 = write_graph6(generalized_petersen(10, 3));
  auto r = run("--json recognize", g6 + "\n");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(trimmed(r.out));
  EXPECT_TRUE(doc["recognition"]["partial_cube"].get<bool>());
  EXPECT_EQ(doc["recognition"]["dimension"], 5);
  EXPECT_EQ(doc["recognition"]["theta_classes"].size(), 5u);
  // Labels are an isometric embedding.
  const auto labels = doc["recognition"]["labels"].get<std::vector<std::string>>();
  const Graph g = parse_graph6(g6);
  const Matrix d = oracle_distances(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      const unsigned long a = std::stoul(labels[u], nullptr, 16), b = std::stoul(labels[v], nullptr, 16);
      EXPECT_EQ(__builtin_popcountl(a ^ b), d[u][v]);
    }
}

TEST(Recognize, Rejections) {
  auto r = run("recognize", write_graph6(cycle(5)) + "\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("odd cycle"), std::string::npos);
  r = run("--json recognize", write_graph6(complete_bipartite(2, 3)) + "\n");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(trimmed(r.out));
  EXPECT_FALSE(doc["recognition"]["partial_cube"].get<bool>());
}

TEST(Classify, Permutahedron) {
  auto r = run("--json classify", write_graph6(cubic_permutahedron()) + "\n");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(trimmed(r.out));
  EXPECT_EQ(doc["verdict"]["tag"], "CubicPermutahedron");
  const auto mapping = doc["verdict"]["mapping"].get<std::vector<Vertex>>();
  EXPECT_TRUE(is_isomorphism(cubic_permutahedron(), cubic_permutahedron(), mapping));
}

TEST(Classify, NonCubicIsAVerdict) {
  auto r = run("--json classify", write_graph6(cycle(6)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(trimmed(r.out))["verdict"]["tag"], "NotCubic");
}

TEST(Classify, OneDocumentPerLine) {
  const std::string in = write_graph6(prism(6)) + "\n" + write_graph6(generalized_petersen(5, 2)) + "\n" +
                         write_graph6(generalized_petersen(10, 3)) + "\n";
  auto r = run("--json classify", in);
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  const std::vector<std::string> tags{"Prism(3)", "NotPartialCube", "G10_3"};
  for (std::size_t i = 0; i < 3; ++i) {
    json doc = json::parse(ls[i]);
    EXPECT_EQ(doc["input"]["line"], static_cast<int>(i + 1));
    EXPECT_EQ(doc["verdict"]["tag"], tags[i]);
  }
}

TEST(Census, TwelveVertices) {
  auto r = run("census --max-n 12");
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls[0], "n\tcount\tgraph6\tverdict");
  EXPECT_EQ(ls.size(), 1u + 1 + 2 + 5 + 19 + 85);
  int positives = 0;
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i].find("Prism(") != std::string::npos) ++positives;
  EXPECT_EQ(positives, 2);
}

TEST(Census, JsonSummary) {
  auto r = run("--json census --max-n 8");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(trimmed(r.out));
  EXPECT_EQ(doc["levels"].size(), 3u);
  EXPECT_EQ(doc["levels"][2]["vertex_transitive_partial_cubes"][0]["tag"], "Prism(2)");
  EXPECT_TRUE(doc["contradictions"].empty());
}

TEST(Census, JobsAndRepeatsAreByteIdentical) {
  const auto a = run("census --max-n 12 --jobs 1");
  const auto b = run("census --max-n 12 --jobs 4");
  const auto c = run("census --max-n 12 --jobs 4");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
}

TEST(Census, OddOrderIsAUsageError) { EXPECT_EQ(run("census --max-n 9").code, 2); }

TEST(Analyze, EulerOnPermutahedron) {
  auto r = run("--json analyze --euler", write_graph6(cubic_permutahedron()) + "\n");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(trimmed(r.out));
  EXPECT_TRUE(doc["partial_cube"].get<bool>());
  EXPECT_EQ(doc["dimension"], 6);
  EXPECT_EQ(doc["euler"]["chi"], 2);
}

TEST(Analyze, Deterministic) {
  const std::string in = write_graph6(truncated_cuboctahedron()) + "\n";
  const auto a = run("--json analyze --claims --coloring 8", in);
  const auto b = run("--json analyze --claims --coloring 8", in);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Errors, ParseErrorsReportOffset) {
  auto r = run("recognize", "C!\n", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("byte 1"), std::string::npos) << r.out;
  r = run("classify", "A_~\n", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("byte 2"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace cubecheck
