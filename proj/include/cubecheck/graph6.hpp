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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubecheck/graph.hpp"

namespace cubecheck {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error("graph6: " + message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace graph6_detail {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxMediumOrder = 258047;

inline int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("byte " + std::to_string(c) + " outside 63..126", pos);
  return c - kBias;
}

}  // namespace graph6_detail

/// Parses one graph6 record (no trailing newline; a single trailing '\n' or
/// "\r\n" is tolerated). Orders up to 258047 are accepted.
inline Graph parse_graph6(std::string_view text) {
  using namespace graph6_detail;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) throw ParseError("header prefix is not supported", 0);
  if (text.empty()) throw ParseError("empty record", 0);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw ParseError("8-byte order header is not supported", 1);
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text, pos);
  } else {
    n = sextet(text, 0);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("truncated adjacency bitstream", text.size());
  if (text.size() > pos + body) throw ParseError("trailing bytes after adjacency bitstream", pos + body);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  int word = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) word = sextet(text, pos + k / 6);
      if (word & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

/// Deterministic graph6 encoding of g under its current vertex order.
inline std::string write_graph6(const Graph& g) {
  using namespace graph6_detail;
  const int n = g.order();
  if (n > kMaxMediumOrder) throw PreconditionError("write_graph6: order " + std::to_string(n) + " too large");
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int word = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

}  // namespace cubecheck
