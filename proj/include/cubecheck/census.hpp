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
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "cubecheck/classify.hpp"
#include "cubecheck/enumerate.hpp"
#include "cubecheck/graph6.hpp"

namespace cubecheck {

struct CensusRow {
  int n = 0;
  int count = 0;       // connected cubic graphs on n vertices
  std::string graph6;  // canonical
  ClassificationVerdict verdict;
};

struct CensusLevel {
  int n = 0;
  int count = 0;
  std::vector<std::string> positives;  // canonical graph6 of every positive verdict
};

struct CensusResult {
  std::vector<CensusRow> rows;  // by n, then graph6
  std::vector<CensusLevel> levels;
  int contradictions = 0;
  std::vector<std::string> contradiction_graph6;
};

/// Runs the classifier on every connected cubic graph with 4..n_max
/// vertices. Classification is spread over `jobs` threads; results are
/// collected by index so the output does not depend on scheduling.
/// `naive` swaps in the brute-force enumerator (small n only).
inline CensusResult census(int n_max, int jobs = 1, bool naive = false) {
  std::vector<std::vector<Graph>> levels;
  if (naive) {
    if (n_max % 2 != 0 || n_max < 4) throw PreconditionError("census: order must be even and at least 4");
    for (int n = 4; n <= n_max; n += 2) levels.push_back(enumerate_cubic_graphs_naive(n));
  } else {
    levels = enumerate_cubic_graphs_upto(n_max);
  }
  std::vector<const Graph*> work;
  std::vector<int> level_of;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const Graph& g : levels[i]) {
      work.push_back(&g);
      level_of.push_back(static_cast<int>(i));
    }
  std::vector<ClassificationVerdict> verdicts(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    try {
      for (std::size_t i = next++; i < work.size() && !failed; i = next++) verdicts[i] = classify(*work[i]);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusResult out;
  for (std::size_t i = 0; i < levels.size(); ++i)
    out.levels.push_back({static_cast<int>(2 * i + 4), static_cast<int>(levels[i].size()), {}});
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto& level = out.levels[level_of[i]];
    CensusRow row{level.n, level.count, write_graph6(*work[i]), std::move(verdicts[i])};
    if (is_positive(row.verdict.tag)) level.positives.push_back(row.graph6);
    if (row.verdict.tag == Tag::ContradictsTheorem) {
      ++out.contradictions;
      out.contradiction_graph6.push_back(row.graph6);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace cubecheck
