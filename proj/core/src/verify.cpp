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

#include "orient/verify.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "orient/error.hpp"

namespace orient {

std::string_view to_string(ClaimId id) noexcept {
  switch (id) {
    case ClaimId::T4: return "T4";
    case ClaimId::T5: return "T5";
    case ClaimId::T6: return "T6";
    case ClaimId::T8: return "T8";
    case ClaimId::L1: return "L1";
    case ClaimId::Moon: return "MOON";
    case ClaimId::K4: return "K4";
    case ClaimId::T1Ex: return "T1EX";
    case ClaimId::Dual: return "DUAL";
    case ClaimId::Score: return "SCORE";
    case ClaimId::MaxKing: return "MAXKING";
  }
  return "?";
}

std::string_view statement(ClaimId id) noexcept {
  switch (id) {
    case ClaimId::T4:
      return "every other vertex is weakly reachable within two steps from a maximum-score vertex";
    case ClaimId::T5: return "every maximum-score vertex is a weak king";
    case ClaimId::T6: return "a graph without transmitters has at least three weak kings";
    case ClaimId::T8: return "no graph has n > k and s = b > 0";
    case ClaimId::L1:
      return "every non-weak-king (non-weak-serf) has a witness arc in no intransitive triple";
    case ClaimId::Moon: return "no tournament has exactly two kings";
    case ClaimId::K4: return "no 4-vertex oriented graph has exactly four kings";
    case ClaimId::T1Ex:
      return "an n-tournament with exactly k kings exists unless k = 2 or n = k = 4";
    case ClaimId::Dual: return "weak serfs and serfs are the weak kings and kings of the converse";
    case ClaimId::Score: return "d+ + d- + d* = n-1, 2d+ + d* = n-1 + d+ - d-, scores sum to n(n-1)";
    case ClaimId::MaxKing: return "every maximum-score vertex is a king";
  }
  return "?";
}

ClaimId parse_claim(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (ClaimId id : kAllClaims) {
    if (to_string(id) == upper) return id;
  }
  throw Error(ErrorCode::UnknownClaim, "no claim named '" + std::string(name) + "'");
}

std::string format_arcs(const OrientedGraph& g) {
  std::ostringstream os;
  bool first = true;
  for (const Arc& a : g.arcs()) {
    if (!first) os << ',';
    os << a.from << '>' << a.to;
    first = false;
  }
  if (first) os << '-';
  return os.str();
}

namespace {

std::string describe(VertexSet s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::optional<std::string> check_max_score(const OrientedGraph& g, bool pairwise) {
  const VertexSet wk = weak_kings(g);
  for (Vertex u : max_score_vertices(g)) {
    if (pairwise) {
      for (Vertex v = 1; v <= g.order(); ++v) {
        if (v != u && !weakly_reachable_within_two(g, u, v)) {
          return "vertex " + std::to_string(v) + " is not weakly reachable from maximum-score vertex " +
                 std::to_string(u);
        }
      }
    } else if (!wk.contains(u)) {
      return "maximum-score vertex " + std::to_string(u) + " is not a weak king";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_lemma1(const OrientedGraph& g) {
  const VertexSet wk = weak_kings(g);
  const VertexSet ws = weak_serfs(g);
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (!wk.contains(u)) {
      const auto v = lemma1_witness(g, u, LemmaSide::KingSide);
      if (!v) return "non-weak-king " + std::to_string(u) + " has no king-side witness";
      if (!g.has_arc(*v, u) || ws.contains(*v) || pair_in_intransitive_triple(g, *v, u)) {
        return "king-side witness " + std::to_string(*v) + " for " + std::to_string(u) +
               " fails a condition";
      }
    }
    if (!ws.contains(u)) {
      const auto w = lemma1_witness(g, u, LemmaSide::SerfSide);
      if (!w) return "non-weak-serf " + std::to_string(u) + " has no serf-side witness";
      if (!g.has_arc(u, *w) || wk.contains(*w) || pair_in_intransitive_triple(g, u, *w)) {
        return "serf-side witness " + std::to_string(*w) + " for " + std::to_string(u) +
               " fails a condition";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_scores(const OrientedGraph& g) {
  const int n = g.order();
  long long sum = 0;
  for (const VertexReport& r : vertex_reports(g)) {
    if (r.out_degree + r.in_degree + r.tie_degree != n - 1) {
      return "degrees of vertex " + std::to_string(r.vertex) + " do not sum to n-1";
    }
    if (r.score != n - 1 + r.out_degree - r.in_degree || r.score != score(g, r.vertex)) {
      return "score formulas disagree at vertex " + std::to_string(r.vertex);
    }
    sum += r.score;
  }
  if (sum != static_cast<long long>(n) * (n - 1)) return "scores sum to " + std::to_string(sum);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_graph(ClaimId id, const OrientedGraph& g) {
  switch (id) {
    case ClaimId::T4: return check_max_score(g, true);
    case ClaimId::T5: return check_max_score(g, false);
    case ClaimId::T6: {
      if (!transmitters(g).empty()) return std::nullopt;
      const VertexSet wk = weak_kings(g);
      if (wk.size() >= 3) return std::nullopt;
      return "no transmitters but weak kings are " + describe(wk);
    }
    case ClaimId::T8: {
      const VertexSet wk = weak_kings(g);
      const VertexSet ws = weak_serfs(g);
      if (g.order() > wk.size() && !ws.empty() && ws.is_subset_of(wk)) {
        return "weak serfs " + describe(ws) + " lie inside weak kings " + describe(wk);
      }
      return std::nullopt;
    }
    case ClaimId::L1: return check_lemma1(g);
    case ClaimId::Moon:
      if (is_tournament(g) && kings(g).size() == 2) {
        return "tournament with kings " + describe(kings(g));
      }
      return std::nullopt;
    case ClaimId::K4:
      if (g.order() == 4 && kings(g).size() == 4) return "all four vertices are kings";
      return std::nullopt;
    case ClaimId::T1Ex: {
      if (!is_tournament(g)) return std::nullopt;
      const int k = kings(g).size();
      if (k == 2 || (k == 4 && g.order() == 4)) {
        return "tournament with exactly " + std::to_string(k) + " kings";
      }
      return std::nullopt;
    }
    case ClaimId::Dual: {
      const OrientedGraph c = g.converse();
      if (weak_serfs(g) != weak_kings(c)) return "weak serfs differ from converse weak kings";
      if (serfs(g) != kings(c)) return "serfs differ from converse kings";
      return std::nullopt;
    }
    case ClaimId::Score: return check_scores(g);
    case ClaimId::MaxKing: {
      const VertexSet k = kings(g);
      for (Vertex u : max_score_vertices(g)) {
        if (!k.contains(u)) return "maximum-score vertex " + std::to_string(u) + " is not a king";
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

struct ScanAcc {
  std::size_t cap = 0;
  std::uint64_t scanned = 0;
  std::uint64_t total = 0;
  std::vector<Counterexample> found;
  std::map<int, std::uint64_t> king_histogram;
  std::uint64_t no_weak_serf = 0;

  void record(GraphCode code, std::string diagnostic) {
    ++total;
    if (found.size() < cap) found.push_back({code, std::move(diagnostic)});
  }

  void merge(const ScanAcc& other) {
    cap = std::max(cap, other.cap);
    scanned += other.scanned;
    total += other.total;
    for (const auto& cx : other.found) {
      if (found.size() < cap) found.push_back(cx);
    }
    for (const auto& [k, count] : other.king_histogram) king_histogram[k] += count;
    no_weak_serf += other.no_weak_serf;
  }
};

bool tournaments_only(ClaimId id) { return id == ClaimId::Moon || id == ClaimId::T1Ex; }

}  // namespace

VerificationReport verify_claim(ClaimId id, int n_max, const VerifyOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::BadParams, "n_max must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.claim = id;
  report.tournaments_only = tournaments_only(id);
  report.n_min = id == ClaimId::K4 ? 4 : 1;
  report.n_max = id == ClaimId::K4 ? 4 : n_max;
  if (report.tournaments_only) {
    tournament_count(report.n_max);
  } else {
    check_enumerable(report.n_max);
  }

  const std::size_t cap = options.max_counterexamples;
  auto visit = [id, cap](ScanAcc& acc, const OrientedGraph& g, GraphCode c) {
    acc.cap = cap;
    ++acc.scanned;
    if (id == ClaimId::K4 || id == ClaimId::T1Ex) ++acc.king_histogram[kings(g).size()];
    if (id == ClaimId::T8 && weak_serfs(g).empty()) ++acc.no_weak_serf;
    if (auto why = check_graph(id, g)) acc.record(c, std::move(*why));
  };

  std::ostringstream extra;
  for (int n = report.n_min; n <= report.n_max; ++n) {
    ScanAcc acc = report.tournaments_only
                      ? reduce_tournaments<ScanAcc>(n, options.workers, visit)
                      : reduce_graphs<ScanAcc>(n, options.workers, visit);
    report.scanned += acc.scanned;
    report.counterexample_total += acc.total;
    for (auto& cx : acc.found) {
      if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(cx));
    }
    if (id == ClaimId::T1Ex) {
      std::ostringstream seen;
      seen << "n=" << n << " king counts:";
      for (const auto& [k, count] : acc.king_histogram) seen << ' ' << k << 'x' << count;
      report.notes.push_back(seen.str());
      for (int k = 1; k <= n; ++k) {
        const bool excluded = k == 2 || (n == 4 && k == 4);
        if (!excluded && !acc.king_histogram.contains(k)) {
          report.missing.push_back("no " + std::to_string(n) + "-tournament with exactly " +
                                   std::to_string(k) + " kings");
        }
      }
    }
    if (id == ClaimId::K4) {
      const int max_kings = acc.king_histogram.empty() ? 0 : acc.king_histogram.rbegin()->first;
      report.notes.push_back("maximum king count observed: " + std::to_string(max_kings));
      std::ostringstream seen;
      seen << "king counts:";
      for (const auto& [k, count] : acc.king_histogram) seen << ' ' << k << 'x' << count;
      report.notes.push_back(seen.str());
    }
    if (id == ClaimId::T8) {
      report.notes.push_back("n=" + std::to_string(n) + " graphs with no weak serf (s = 0): " +
                             std::to_string(acc.no_weak_serf));
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string format_report(const VerificationReport& report, bool include_timing) {
  std::ostringstream os;
  os << "claim: " << to_string(report.claim) << '\n';
  os << "statement: " << statement(report.claim) << '\n';
  os << "orders: " << report.n_min << ".." << report.n_max
     << (report.tournaments_only ? " (tournaments)" : "") << '\n';
  os << "scanned: " << report.scanned << '\n';
  os << "counterexamples: " << report.counterexample_total << '\n';
  if (include_timing) {
    os << "elapsed_ms: " << std::fixed << std::setprecision(1) << report.elapsed.count() << '\n';
  }
  for (const auto& note : report.notes) os << "note: " << note << '\n';
  for (const auto& gap : report.missing) os << "missing: " << gap << '\n';
  for (const auto& cx : report.counterexamples) {
    os << "n=" << cx.code.n << " code=" << cx.code.value << " arcs=" << format_arcs(decode(cx.code))
       << " : " << cx.diagnostic << '\n';
  }
  os << "result: " << (report.certified() ? "CERTIFIED" : "REFUTED") << '\n';
  return os.str();
}

}  // namespace orient
