// Copyright 2026 The orient Authors
//
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "orient/construct.hpp"
#include "orient/dominance.hpp"
#include "orient/enumerate.hpp"
#include "orient/error.hpp"
#include "orient/graph.hpp"
#include "orient/text_format.hpp"
#include "orient/verify.hpp"

namespace orient::cli {

namespace {

// Distinguishes unreadable files from malformed arguments.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FileError("cannot write '" + path + "'");
}

OrientedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

int to_int(const std::string& text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
  }
  return value;
}

std::string commented(const std::string& text) {
  std::istringstream lines(text);
  std::string out;
  for (std::string line; std::getline(lines, line);) out += "# " + line + '\n';
  return out;
}

void write_analysis(const OrientedGraph& g, std::ostream& os) {
  os << "order: " << g.order() << '\n';
  os << "vertex  out  in  tie  score\n";
  for (const VertexReport& r : vertex_reports(g)) {
    os << std::setw(6) << r.vertex << std::setw(5) << r.out_degree << std::setw(4) << r.in_degree
       << std::setw(5) << r.tie_degree << std::setw(7) << r.score << '\n';
  }
  os << "score sequence: [";
  const ScoreSequence seq = score_sequence(g);
  for (std::size_t i = 0; i < seq.scores.size(); ++i) os << (i ? ", " : "") << seq.scores[i];
  os << "]\n";
  const DominanceReport r = analyze(g);
  os << "tournament: " << (is_tournament(g) ? "yes" : "no") << '\n';
  os << "transmitters: " << r.transmitters << '\n';
  os << "kings: " << r.kings << '\n';
  os << "serfs: " << r.serfs << '\n';
  os << "weak kings: " << r.weak_kings << '\n';
  os << "weak serfs: " << r.weak_serfs << '\n';
  os << "(k, s, b): " << r.counts() << '\n';
  const TripleCensus census = triple_census(g);
  os << "triples: transitive=" << census.transitive << " intransitive=" << census.intransitive
     << '\n';
}

// Graph document preceded by the certification summary as comments.
std::string certified_document(const CertifiedGraph& cg) {
  return commented(format_certification(cg)) + serialize_graph(cg.graph);
}

struct Options {
  std::string file;
  std::string out_path;
  bool strict = false;
  bool dot = false;
  bool annotate = false;
  std::string reading = "all-but-3";
  std::string generator;
  std::vector<std::string> params;
  std::string claim;
  int nmax = 0;
  int workers = 1;
  std::size_t max_counterexamples = 100;
  std::string search_kind;
  int n = 0, k = 0, s = 0, b = 0;
};

int emit_construction(const CertifiedGraph& cg, const Options& opt, std::ostream& os) {
  if (!opt.out_path.empty()) {
    write_file(opt.out_path, certified_document(cg));
    os << format_certification(cg);
  } else {
    os << certified_document(cg);
  }
  return (opt.strict && !cg.verified) ? kExitFailed : kExitOk;
}

int cmd_construct(const Options& opt, std::ostream& os) {
  const auto& p = opt.params;
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw UsageError(std::string("usage: construct ") + usage);
  };
  if (opt.generator == "weak-kings-exact") {
    need(2, "weak-kings-exact <n> <k>");
    return emit_construction(weak_kings_exact(to_int(p[0], "n"), to_int(p[1], "k")), opt, os);
  }
  if (opt.generator == "two-kings") {
    need(1, "two-kings <n> [--reading all-but-3|even]");
    TwoKingsReading reading = TwoKingsReading::AllButThird;
    if (opt.reading == "even") {
      reading = TwoKingsReading::EvenOnly;
    } else if (opt.reading != "all-but-3") {
      throw UsageError("--reading must be all-but-3 or even");
    }
    return emit_construction(two_kings_oriented(to_int(p[0], "n"), reading), opt, os);
  }
  if (opt.generator == "nksb") {
    need(4, "nksb <n> <k> <s> <b>");
    const NksbSpec spec{to_int(p[0], "n"), to_int(p[1], "k"), to_int(p[2], "s"),
                        to_int(p[3], "b")};
    return emit_construction(nksb_oriented(spec, NksbMode::Verbatim), opt, os);
  }
  if (opt.generator == "embed") {
    need(1, "embed <graph-file>");
    return emit_construction(all_weak_kings_embedding(load_graph(p[0])), opt, os);
  }
  throw UsageError("unknown generator '" + opt.generator +
                   "' (weak-kings-exact, two-kings, nksb, embed)");
}

int cmd_verify(const Options& opt, std::ostream& os) {
  VerifyOptions vo;
  vo.workers = opt.workers;
  vo.max_counterexamples = opt.max_counterexamples;
  const VerificationReport report = verify_claim(parse_claim(opt.claim), opt.nmax, vo);
  os << format_report(report);
  return report.certified() ? kExitOk : kExitFailed;
}

int cmd_search(const Options& opt, std::ostream& os) {
  if (opt.search_kind == "nksb") {
    SearchOptions so;
    so.workers = opt.workers;
    const NksbSpec spec{opt.n, opt.k, opt.s, opt.b};
    try {
      return emit_construction(nksb_oriented(spec, NksbMode::CertifiedSearch, so), opt, os);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound && e.code() != ErrorCode::BudgetExhausted) throw;
      os << "not found: " << e.what() << '\n';
      return kExitFailed;
    }
  }
  if (opt.search_kind == "tournament") {
    const auto code = find_tournament_with_k_kings(opt.n, opt.k, opt.workers);
    if (!code) {
      os << "no " << opt.n << "-tournament has exactly " << opt.k << " kings\n";
      return kExitFailed;
    }
    const OrientedGraph g = decode(*code);
    os << "# code: " << code->value << "\n# kings: " << kings(g) << '\n' << serialize_graph(g);
    return kExitOk;
  }
  if (opt.search_kind == "embedding-converse") {
    const auto hit = find_embedding_converse_witness(opt.nmax > 0 ? opt.nmax : 5);
    if (!hit) {
      os << "no witness found\n";
      return kExitFailed;
    }
    const OrientedGraph g = decode(hit->code);
    os << "# code: " << hit->code.value << "\n# weak kings: " << hit->weak_kings
       << "\n# transmitter of the induced subgraph: " << hit->transmitter << '\n'
       << serialize_graph(g);
    return kExitOk;
  }
  throw UsageError("unknown search '" + opt.search_kind +
                   "' (nksb, tournament, embedding-converse)");
}

int cmd_export(const Options& opt, std::ostream& os) {
  if (!opt.dot) throw UsageError("export needs --dot");
  const OrientedGraph g = load_graph(opt.file);
  std::optional<DominanceReport> annotations;
  if (opt.annotate) annotations = analyze(g);
  const std::string dot = export_dot(g, annotations);
  if (opt.out_path.empty()) {
    os << dot;
  } else {
    write_file(opt.out_path, dot);
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Kings, serfs, weak kings and weak serfs in oriented graphs", "orient"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Print scores, dominance sets and triples");
  analyze_cmd->add_option("file", opt.file, "Graph document")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build and certify a construction");
  construct_cmd->add_option("generator", opt.generator,
                            "weak-kings-exact | two-kings | nksb | embed")
      ->required();
  construct_cmd->add_option("params", opt.params, "Generator parameters");
  construct_cmd->add_option("--out", opt.out_path, "Write the graph document here");
  construct_cmd->add_flag("--strict", opt.strict, "Exit 1 when certification fails");
  construct_cmd->add_option("--reading", opt.reading, "two-kings arc reading: all-but-3 | even");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a claim");
  verify_cmd->add_option("claim", opt.claim, "T4 T5 T6 T8 L1 MOON K4 T1EX DUAL SCORE MAXKING")
      ->required();
  verify_cmd->add_option("--nmax", opt.nmax, "Largest order scanned")->required();
  verify_cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-counterexamples", opt.max_counterexamples,
                         "Counterexamples listed");

  auto* search_cmd = app.add_subcommand("search", "Search for a graph with given counts");
  search_cmd->add_option("kind", opt.search_kind, "nksb | tournament | embedding-converse")
      ->required();
  search_cmd->add_option("--n", opt.n, "Order");
  search_cmd->add_option("--k", opt.k, "Weak kings (kings for tournament)");
  search_cmd->add_option("--s", opt.s, "Weak serfs");
  search_cmd->add_option("--b", opt.b, "Vertices that are both");
  search_cmd->add_option("--nmax", opt.nmax, "Largest order for embedding-converse");
  search_cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", opt.out_path, "Write the graph document here");

  auto* export_cmd = app.add_subcommand("export", "Export a graph");
  export_cmd->add_option("file", opt.file, "Graph document")->required();
  export_cmd->add_flag("--dot", opt.dot, "Graphviz output");
  export_cmd->add_flag("--annotate", opt.annotate, "Colour weak kings/serfs, label scores");
  export_cmd->add_option("--out", opt.out_path, "Write here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  std::ostringstream buffered;
  int status = kExitOk;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*analyze_cmd) {
      write_analysis(load_graph(opt.file), buffered);
    } else if (*construct_cmd) {
      status = cmd_construct(opt, buffered);
    } else if (*verify_cmd) {
      status = cmd_verify(opt, buffered);
    } else if (*search_cmd) {
      status = cmd_search(opt, buffered);
    } else if (*export_cmd) {
      status = cmd_export(opt, buffered);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ConstructionInvalid ? kExitFailed : kExitUsage;
  }
  out << buffered.str();
  return status;
}

}  // namespace orient::cli
