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

// cubecheck: generate, recognize, analyze, classify and census cubic
// partial cubes. Exit codes: 0 clean, 1 ContradictsTheorem seen, 2 usage or
// parse error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubecheck/cubecheck.hpp"
#include "cubecheck/report.hpp"

namespace {

using namespace cubecheck;
using report::Json;

constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  void lap(const std::string& name) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  void attach(Json& doc) const {
    if (enabled_) doc["timings_ms"] = laps_;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json laps_ = Json::object();
};

// ---- generate ----

struct Generated {
  Graph graph;
  std::vector<std::string> meaning;
};

std::string bits(unsigned v, int width) {
  std::string s(width, '0');
  for (int i = 0; i < width; ++i)
    if (v >> i & 1) s[width - 1 - i] = '1';
  return s;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
}

Generated generate(const std::string& family, const std::vector<std::string>& params, int element_cap) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw UsageError(family + ": expected " + std::to_string(k) + " parameter(s), got " +
                       std::to_string(params.size()));
  };
  auto p = [&](std::size_t i) { return to_int(params[i], family); };
  Generated out;
  if (family == "cycle") {
    need(1);
    out.graph = cycle(p(0));
    for (int i = 0; i < out.graph.order(); ++i) out.meaning.push_back(std::to_string(i));
  } else if (family == "hypercube") {
    need(1);
    out.graph = hypercube(p(0));
    for (int v = 0; v < out.graph.order(); ++v) out.meaning.push_back(bits(v, p(0)));
  } else if (family == "prism") {
    need(1);
    out.graph = prism(p(0));
    for (int v = 0; v < out.graph.order(); ++v)
      out.meaning.push_back(std::to_string(v / p(0)) + "," + std::to_string(v % p(0)));
  } else if (family == "gp") {
    need(2);
    out.graph = generalized_petersen(p(0), p(1));
    for (int v = 0; v < out.graph.order(); ++v)
      out.meaning.push_back((v < p(0) ? "outer:" : "inner:") + std::to_string(v % p(0)));
  } else if (family == "middle-levels") {
    need(1);
    out.graph = middle_levels(p(0));
    for (unsigned m : middle_levels_masks(p(0))) out.meaning.push_back(bits(m, 2 * p(0) - 1));
  } else if (family == "graph-x") {
    need(0);
    out.graph = graph_x();
    out.meaning = graph_x_names();
  } else if (family == "coxeter" || family == "permutahedron" || family == "trunc-cubocta" ||
             family == "trunc-icosidodeca") {
    CoxeterMatrix cm = kA3;
    if (family == "coxeter") {
      need(3);
      cm = CoxeterMatrix{p(0), p(1), p(2)};
    } else {
      need(0);
      cm = family == "permutahedron" ? kA3 : family == "trunc-cubocta" ? kB3 : kH3;
    }
    auto cc = coxeter_cayley(cm, element_cap);
    out.graph = std::move(cc.graph);
    out.meaning = std::move(cc.words);
  } else if (family == "product") {
    need(2);
    const Graph a = parse_graph6(params[0]), b = parse_graph6(params[1]);
    out.graph = cartesian_product(a, b);
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < b.order(); ++y) out.meaning.push_back(std::to_string(x) + "," + std::to_string(y));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return out;
}

// ---- per-line drivers ----

struct Options {
  bool json = false;
  bool timings = false;
};

// Reads graph6 lines from `path` ("-" for stdin) and calls fn per record.
int for_each_input(const std::string& path, const std::function<int(const Graph&, const std::string&, int)>& fn) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    in = &file;
  }
  int status = 0, line_no = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
    status = std::max(status, fn(g, line, line_no));
  }
  return status;
}

Json document(const Graph& g, const std::string& g6, int line) {
  Json doc;
  doc["schema_version"] = report::kSchemaVersion;
  doc["input"] = report::input_json(g, g6, line);
  return doc;
}

int cmd_recognize(const std::string& path, const Options& opt) {
  return for_each_input(path, [&](const Graph& g, const std::string& g6, int line) {
    Stopwatch sw(opt.timings);
    const auto v = is_partial_cube(g);
    sw.lap("recognize");
    if (opt.json) {
      Json doc = document(g, g6, line);
      doc["recognition"] = report::recognition_json(g, v);
      sw.attach(doc);
      std::cout << doc.dump() << '\n';
    } else if (v.is_partial_cube) {
      std::cout << g6 << "\tpartial cube\tdimension " << v.labeling->dim << '\n';
    } else {
      std::cout << g6 << "\tnot a partial cube\t" << describe(*v.witness, g) << '\n';
    }
    return 0;
  });
}

int cmd_classify(const std::string& path, const Options& opt) {
  return for_each_input(path, [&](const Graph& g, const std::string& g6, int line) {
    Stopwatch sw(opt.timings);
    const auto v = classify(g);
    sw.lap("classify");
    if (opt.json) {
      Json doc = document(g, g6, line);
      doc["verdict"] = report::verdict_json(v);
      sw.attach(doc);
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << g6 << '\t' << tag_name(v);
      if (is_positive(v.tag)) std::cout << "\t~ " << v.reference;
      else std::cout << '\t' << v.witness;
      std::cout << '\n';
    }
    return v.tag == Tag::ContradictsTheorem ? kExitContradiction : 0;
  });
}

struct AnalyzeOptions {
  bool euler = false;
  bool claims = false;
  int max_cycle_len = 0;  // 0: default
  int coloring = 0;
  std::vector<std::string> traverses;
};

std::pair<EdgeId, EdgeId> parse_edge_pair(const Graph& g, const std::string& request) {
  // "u-v,x-y"
  auto edge = [&](const std::string& s) {
    const auto dash = s.find('-');
    if (dash == std::string::npos) throw UsageError("--traverse: bad edge '" + s + "'");
    const int a = to_int(s.substr(0, dash), "--traverse"), b = to_int(s.substr(dash + 1), "--traverse");
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) throw UsageError("--traverse: vertex out of range");
    auto e = g.edge_id(a, b);
    if (!e) throw UsageError("--traverse: " + s + " is not an edge");
    return *e;
  };
  const auto comma = request.find(',');
  if (comma == std::string::npos) throw UsageError("--traverse: expected u-v,x-y");
  return {edge(request.substr(0, comma)), edge(request.substr(comma + 1))};
}

int cmd_analyze(const std::string& path, const Options& opt, const AnalyzeOptions& aopt) {
  return for_each_input(path, [&](const Graph& g, const std::string& g6, int line) {
    Stopwatch sw(opt.timings);
    Json doc = document(g, g6, line);
    const DistanceMatrix d = bfs_distances(g);
    const auto pc = is_partial_cube(g, d);
    sw.lap("recognize");
    doc["partial_cube"] = pc.is_partial_cube;
    if (!pc.is_partial_cube) {
      doc["witness"] = report::witness_json(*pc.witness, g);
    } else {
      doc["dimension"] = pc.labeling->dim;
      const int max_len = aopt.max_cycle_len > 0 ? aopt.max_cycle_len : default_max_cycle_len(d);
      if (max_len < 4 || max_len % 2 != 0) throw UsageError("--max-cycle-len must be even and at least 4");
      doc["max_cycle_len"] = max_len;
      if (is_cubic(g)) {
        doc["signature"] = report::signature_json(girth_signature(g, d));
        sw.lap("signature");
      }
      const auto index = index_convex_cycles(g, d, max_len);
      doc["convex_cycles"] = report::cycles_json(index.cycles);
      sw.lap("convex_cycles");
      if (aopt.euler) {
        try {
          doc["euler"] = report::euler_json(euler_report(g, d));
        } catch (const PreconditionError& e) {
          doc["euler"] = Json{{"error", e.what()}};
        }
        sw.lap("euler");
      }
      if (aopt.claims) {
        doc["claims"] = report::claims_json(claims_audit(g, d, max_len));
        sw.lap("claims");
      }
      if (!aopt.traverses.empty()) {
        Json ts = Json::array();
        for (const auto& request : aopt.traverses) {
          auto [e1, e2] = parse_edge_pair(g, request);
          try {
            auto t = find_convex_traverse(g, d, index, e1, e2);
            if (t) ts.push_back(report::traverse_json(g, *t));
            else ts.push_back(Json{{"request", request}, {"error", "no convex traverse among the enumerated cycles"}});
          } catch (const PreconditionError& e) {
            ts.push_back(Json{{"request", request}, {"error", e.what()}});
          }
        }
        doc["traverses"] = std::move(ts);
        sw.lap("traverses");
      }
      if (aopt.coloring) {
        try {
          doc["coloring"] = report::coloring_json(g, coxeter_edge_coloring(g, aopt.coloring));
        } catch (const Error& e) {
          doc["coloring"] = Json{{"error", e.what()}};
        }
        sw.lap("coloring");
      }
    }
    sw.attach(doc);
    if (opt.json) {
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  });
}

int cmd_census(int max_n, int jobs, bool naive, const std::string& summary, const Options& opt) {
  Stopwatch sw(opt.timings);
  const auto result = census(max_n, jobs, naive);
  sw.lap("census");
  Json summary_doc = report::census_json(result, max_n);
  sw.attach(summary_doc);
  if (opt.json) {
    std::cout << summary_doc.dump() << '\n';
  } else {
    std::cout << "n\tcount\tgraph6\tverdict\n";
    for (const auto& row : result.rows)
      std::cout << row.n << '\t' << row.count << '\t' << row.graph6 << '\t' << tag_name(row.verdict) << '\n';
  }
  if (!summary.empty()) {
    std::ofstream out(summary);
    if (!out) throw UsageError("cannot write '" + summary + "'");
    out << summary_doc.dump(2) << '\n';
  }
  for (const auto& g6 : result.contradiction_graph6) std::cerr << "ContradictsTheorem: " << g6 << '\n';
  return result.contradictions > 0 ? kExitContradiction : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubecheck: cubic partial cube recognition, analysis and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON (one document per input line)");
  app.add_flag("--timings", opt.timings, "Add per-stage timings in milliseconds to JSON output");

  auto* gen = app.add_subcommand("generate", "Print a named graph as graph6");
  std::string family;
  std::vector<std::string> params;
  bool meta = false;
  int element_cap = 10000;
  gen->add_option("family", family,
                  "cycle | hypercube | prism | gp | middle-levels | graph-x | coxeter | permutahedron | "
                  "trunc-cubocta | trunc-icosidodeca | product")
      ->required();
  gen->add_option("params", params, "Family parameters (product takes two graph6 strings)");
  gen->add_flag("--meta", meta, "Add a second line with a JSON sidecar describing each vertex");
  gen->add_option("--element-cap", element_cap, "Largest Coxeter group to generate")->check(CLI::PositiveNumber);

  std::string input = "-";
  auto* rec = app.add_subcommand("recognize", "Partial cube recognition with theta classes and labels");
  rec->add_option("input", input, "graph6 file, one graph per line ('-' for stdin)");

  auto* cls = app.add_subcommand("classify", "Classify cubic vertex-transitive partial cubes");
  cls->add_option("input", input, "graph6 file, one graph per line ('-' for stdin)");

  AnalyzeOptions aopt;
  auto* ana = app.add_subcommand("analyze", "Girth signature, convex cycles and optional reports");
  ana->add_option("input", input, "graph6 file, one graph per line ('-' for stdin)");
  ana->add_flag("--euler", aopt.euler, "Face count and Euler characteristic");
  ana->add_flag("--claims", aopt.claims, "Audit 4-cycles and overlapping convex cycles");
  ana->add_option("--traverse", aopt.traverses, "Convex traverse between edges, as u-v,x-y (repeatable)");
  ana->add_option("--max-cycle-len", aopt.max_cycle_len, "Longest convex cycle to enumerate (even)");
  ana->add_option("--coloring", aopt.coloring, "Three-edge-coloring check with k = 8 or 10");

  int max_n = 16, jobs = 1;
  std::string summary;
  auto* cen = app.add_subcommand("census", "Classify every connected cubic graph up to --max-n vertices");
  cen->add_option("--max-n", max_n, "Largest order (even)")->required();
  cen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  cen->add_option("--summary", summary, "Also write the JSON summary to this file");
  bool naive = false;
  cen->add_flag("--naive", naive, "Enumerate by brute force with isomorphism dedup (slow; n <= 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const Generated out = generate(family, params, element_cap);
      std::cout << write_graph6(out.graph) << '\n';
      if (meta) {
        Json side;
        side["schema_version"] = report::kSchemaVersion;
        side["family"] = family;
        side["params"] = params;
        side["order"] = out.graph.order();
        side["size"] = out.graph.size();
        side["vertices"] = out.meaning;
        std::cout << side.dump() << '\n';
      }
      return 0;
    }
    if (*rec) return cmd_recognize(input, opt);
    if (*cls) return cmd_classify(input, opt);
    if (*ana) return cmd_analyze(input, opt, aopt);
    if (*cen) return cmd_census(max_n, jobs, naive, summary, opt);
  } catch (const UsageError& e) {
    std::cerr << "cubecheck: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "cubecheck: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
