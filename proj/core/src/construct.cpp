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

#include "orient/construct.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include "orient/enumerate.hpp"
#include "orient/error.hpp"
#include "orient/verify.hpp"

namespace orient {

namespace {

std::string spec_text(const NksbSpec& s) {
  std::ostringstream os;
  os << '(' << s.n << ", " << s.k << ", " << s.s << ", " << s.b << ')';
  return os.str();
}

// Accumulates arcs for a construction; pairs never touched stay tied.
class ArcList {
 public:
  void add(Vertex from, Vertex to) { arcs_.push_back({from, to}); }
  OrientedGraph build(int n) const { return OrientedGraph::build(n, arcs_); }

 private:
  std::vector<Arc> arcs_;
};

}  // namespace

void NksbSpec::validate() const {
  if (!(n >= 1 && n >= k && k >= s && s >= b && b >= 0)) {
    throw Error(ErrorCode::BadParams,
                "need n >= k >= s >= b >= 0 and n >= 1, got " + spec_text(*this));
  }
}

bool Claim::matches(const DominanceReport& report) const {
  if (kings && *kings != report.kings) return false;
  if (weak_kings && *weak_kings != report.weak_kings) return false;
  if (weak_serfs && *weak_serfs != report.weak_serfs) return false;
  if (weak_king_count && *weak_king_count != report.weak_kings.size()) return false;
  if (counts && *counts != report.counts()) return false;
  return true;
}

CertifiedGraph certify(OrientedGraph graph, Claim claim, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (Vertex v = 1; v <= graph.order(); ++v) labels.push_back(std::to_string(v));
  }
  DominanceReport report = analyze(graph);
  const bool ok = claim.matches(report);
  return CertifiedGraph{std::move(graph), report, std::move(claim), ok, std::move(labels)};
}

CertifiedGraph weak_kings_exact(int n, int k) {
  if (n < 1 || k < 1 || k > n || n > kMaxVertices) {
    throw Error(ErrorCode::BadParams, "need 1 <= k <= n, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
  }
  Claim claim;
  claim.description = "weak-kings-exact n=" + std::to_string(n) + " k=" + std::to_string(k);
  claim.weak_king_count = k;

  ArcList arcs;
  std::vector<std::string> labels;
  VertexSet expected;
  if (n <= 2) {
    // Too small for the u block: one vertex, a tie, or a single arc.
    labels = n == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
    if (n == 2 && k == 1) arcs.add(1, 2);
    expected = VertexSet::range(1, k);
  } else {
    constexpr Vertex x = 1;
    constexpr Vertex y = 2;
    const int m = n - 2;
    auto u = [](int i) { return Vertex{i + 2}; };
    labels = {"x", "y"};
    for (int i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));

    if (k >= 3) {
      for (int i = 1; i <= m; ++i) {
        arcs.add(u(i), x);
        arcs.add(y, u(i));
      }
      expected = VertexSet::range(1, n);
      // Step down: u_m beats u_i for k-2 <= i <= n-3, removing each such u_i.
      for (int i = k - 2; i <= n - 3; ++i) {
        arcs.add(u(m), u(i));
        expected.erase(u(i));
      }
    } else if (k == 2) {
      for (int i = 1; i <= m; ++i) {
        arcs.add(x, u(i));
        arcs.add(y, u(i));
      }
      expected = VertexSet{x, y};
    } else {
      arcs.add(u(1), x);
      arcs.add(u(1), y);
      for (int i = 2; i <= m; ++i) {
        arcs.add(u(1), u(i));
        arcs.add(x, u(i));
        arcs.add(y, u(i));
      }
      expected = VertexSet{u(1)};
    }
  }
  claim.weak_kings = expected;

  CertifiedGraph result = certify(arcs.build(n), std::move(claim), std::move(labels));
  if (!result.verified) {
    std::ostringstream os;
    os << "weak-kings-exact(" << n << ", " << k << ") produced weak kings "
       << result.report.weak_kings;
    throw Error(ErrorCode::ConstructionInvalid, os.str());
  }
  return result;
}

CertifiedGraph two_kings_oriented(int n, TwoKingsReading reading) {
  if (n < 4 || n > kMaxVertices) {
    throw Error(ErrorCode::BadParams, "two-kings construction needs n >= 4, got " +
                                          std::to_string(n));
  }
  ArcList arcs;
  arcs.add(1, 2);
  for (Vertex i = 4; i <= n; ++i) {
    if (reading == TwoKingsReading::AllButThird || i % 2 == 0) arcs.add(1, i);
  }
  arcs.add(3, 1);
  arcs.add(2, 3);
  for (Vertex i = 4; i <= n; ++i) arcs.add(2, i);

  std::vector<std::string> labels;
  for (Vertex v = 1; v <= n; ++v) labels.push_back("v" + std::to_string(v));
  Claim claim;
  claim.description = "two-kings n=" + std::to_string(n) + " reading=" +
                      (reading == TwoKingsReading::AllButThird ? "all-but-3" : "even");
  claim.kings = VertexSet{1, 3};
  return certify(arcs.build(n), std::move(claim), std::move(labels));
}

namespace {

CertifiedGraph nksb_verbatim(const NksbSpec& spec) {
  const auto [n, k, s, b] = spec;
  if (!(s > b) || k - b < 2 || b == 1 || n != k + s - b) {
    throw Error(ErrorCode::UnsupportedSpec,
                "verbatim construction needs s > b, k - b >= 2, b != 1 and n = k + s - b, got " +
                    spec_text(spec));
  }
  // Blocks in order: x1, y1, u_1..u_{k-b-2} | x2, y2, v_1..v_{b-2} | z_1..z_{s-b}.
  const int us = k - b - 2;
  const int vs = b >= 2 ? b - 2 : 0;
  const int zs = s - b;
  const Vertex x1 = 1;
  const Vertex y1 = 2;
  auto u = [](int i) { return Vertex{2 + i}; };
  const bool shared = b >= 2;
  const Vertex x2 = k - b + 1;
  const Vertex y2 = k - b + 2;
  auto v = [&](int j) { return Vertex{k - b + 2 + j}; };
  auto z = [&](int i) { return Vertex{k + i}; };

  std::vector<std::string> labels = {"x1", "y1"};
  for (int i = 1; i <= us; ++i) labels.push_back("u" + std::to_string(i));
  if (shared) {
    labels.push_back("x2");
    labels.push_back("y2");
    for (int j = 1; j <= vs; ++j) labels.push_back("v" + std::to_string(j));
  }
  for (int i = 1; i <= zs; ++i) labels.push_back("z" + std::to_string(i));

  ArcList arcs;
  for (int i = 1; i <= us; ++i) {
    arcs.add(u(i), x1);
    arcs.add(y1, u(i));
  }
  if (shared) {
    for (int j = 1; j <= vs; ++j) {
      arcs.add(v(j), x2);
      arcs.add(y2, v(j));
    }
    for (int i = 1; i <= zs; ++i) arcs.add(z(i), y2);
    arcs.add(x1, y2);
    arcs.add(y1, y2);
    for (int r = 1; r <= us; ++r) arcs.add(u(r), y2);
  }
  for (int i = 1; i <= zs; ++i) {
    arcs.add(x1, z(i));
    arcs.add(y1, z(i));
  }

  Claim claim;
  claim.description = "nksb verbatim " + spec_text(spec);
  claim.counts = KsbTriple{k, s, b};
  claim.weak_kings = VertexSet::range(1, k);
  claim.weak_serfs = VertexSet::range(k - b + 1, n);
  return certify(arcs.build(n), std::move(claim), std::move(labels));
}

int distance(const DominanceReport& r, const KsbTriple& target) {
  const KsbTriple got = r.counts();
  return std::abs(got.k - target.k) + std::abs(got.s - target.s) + std::abs(got.b - target.b);
}

std::optional<OrientedGraph> local_search(int n, const KsbTriple& target,
                                          const SearchOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::uniform_int_distribution<int> rel(0, 2);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  constexpr std::uint64_t kRestart = 20'000;

  std::vector<Mask> out(n, 0);
  int current = 0;
  auto restart = [&] {
    const OrientedGraph g = random_graph(n, density(rng), rng);
    for (Vertex w = 1; w <= n; ++w) out[w - 1] = g.out_mask(w);
    current = distance(analyze(g), target);
  };
  restart();
  for (std::uint64_t step = 0; step < options.step_budget; ++step) {
    if (current == 0) return OrientedGraph::from_out_masks(n, out);
    if (step % kRestart == kRestart - 1) {
      restart();
      continue;
    }
    const Vertex a = pick(rng);
    const Vertex c = pick(rng);
    if (a == c) continue;
    std::vector<Mask> trial = out;
    trial[a - 1] &= ~vertex_bit(c);
    trial[c - 1] &= ~vertex_bit(a);
    const int r = rel(rng);
    if (r == 1) trial[a - 1] |= vertex_bit(c);
    if (r == 2) trial[c - 1] |= vertex_bit(a);
    const OrientedGraph g = OrientedGraph::from_out_masks(n, trial);
    const int d = distance(analyze(g), target);
    if (d <= current) {
      out = std::move(trial);
      current = d;
    }
  }
  if (current == 0) return OrientedGraph::from_out_masks(n, out);
  return std::nullopt;
}

CertifiedGraph nksb_search(const NksbSpec& spec, const SearchOptions& options) {
  const KsbTriple target{spec.k, spec.s, spec.b};
  Claim claim;
  claim.description = "nksb search " + spec_text(spec);
  claim.counts = target;

  if (spec.n <= kExhaustiveSearchCeiling) {
    const auto code = find_ksb_exhaustive(spec.n, target, options.workers);
    if (!code) {
      throw Error(ErrorCode::NotFound,
                  "no oriented graph realizes " + spec_text(spec) + " (exhaustive search)");
    }
    return certify(decode(*code), std::move(claim));
  }

  if (spec.k + spec.s - spec.b > spec.n || spec.s == 0) {
    throw Error(ErrorCode::NotFound, spec_text(spec) + " is impossible: every graph has a weak "
                                                       "serf and k + s - b cannot exceed n");
  }
  try {
    CertifiedGraph verbatim = nksb_verbatim(spec);
    if (verbatim.verified) {
      verbatim.claimed = claim;
      return verbatim;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedSpec) throw;
  }
  if (auto g = local_search(spec.n, target, options)) return certify(*g, std::move(claim));
  throw Error(ErrorCode::BudgetExhausted, "local search found nothing for " + spec_text(spec) +
                                              " within " + std::to_string(options.step_budget) +
                                              " steps");
}

}  // namespace

CertifiedGraph nksb_oriented(const NksbSpec& spec, NksbMode mode, const SearchOptions& options) {
  spec.validate();
  if (spec.n > kMaxVertices) throw Error(ErrorCode::BadParams, "n exceeds " + std::to_string(kMaxVertices));
  return mode == NksbMode::Verbatim ? nksb_verbatim(spec) : nksb_search(spec, options);
}

CertifiedGraph all_weak_kings_embedding(const OrientedGraph& d) {
  const int n = d.order();
  if (n < 3) throw Error(ErrorCode::TooSmall, "embedding needs at least 3 vertices");
  if (2 * n > kMaxVertices) throw Error(ErrorCode::BadParams, "embedding exceeds vertex limit");
  if (const VertexSet t = transmitters(d); !t.empty()) {
    std::ostringstream os;
    os << "transmitters " << t;
    throw Error(ErrorCode::TransmitterPresent, os.str());
  }
  std::vector<Mask> out(2 * n, 0);
  for (Vertex i = 1; i <= n; ++i) {
    out[i - 1] = d.out_mask(i);
    out[n + i - 1] = d.out_mask(i) << n;
    for (Vertex j = 1; j <= n; ++j) {
      if (i != j) out[i - 1] |= vertex_bit(n + j);
    }
    out[n + i - 1] |= vertex_bit(i);
  }
  std::vector<std::string> labels;
  for (Vertex i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
  for (Vertex i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  Claim claim;
  claim.description = "all-weak-kings embedding of a " + std::to_string(n) + "-vertex graph";
  claim.weak_kings = VertexSet::range(1, n);
  return certify(OrientedGraph::from_out_masks(2 * n, out), std::move(claim), std::move(labels));
}

std::string format_certification(const CertifiedGraph& cg) {
  std::ostringstream os;
  const DominanceReport& r = cg.report;
  os << "construction: " << cg.claimed.description << '\n';
  os << "order: " << cg.graph.order() << '\n';
  os << "arcs: " << format_arcs(cg.graph) << '\n';
  os << "labels:";
  for (std::size_t i = 0; i < cg.labels.size(); ++i) os << ' ' << (i + 1) << '=' << cg.labels[i];
  os << '\n';
  if (cg.claimed.kings) os << "claimed kings: " << *cg.claimed.kings << '\n';
  if (cg.claimed.weak_kings) os << "claimed weak kings: " << *cg.claimed.weak_kings << '\n';
  if (cg.claimed.weak_serfs) os << "claimed weak serfs: " << *cg.claimed.weak_serfs << '\n';
  if (cg.claimed.weak_king_count) {
    os << "claimed weak king count: " << *cg.claimed.weak_king_count << '\n';
  }
  if (cg.claimed.counts) os << "claimed (k, s, b): " << *cg.claimed.counts << '\n';
  os << "kings: " << r.kings << '\n';
  os << "serfs: " << r.serfs << '\n';
  os << "weak kings: " << r.weak_kings << '\n';
  os << "weak serfs: " << r.weak_serfs << '\n';
  os << "transmitters: " << r.transmitters << '\n';
  os << "(k, s, b): " << r.counts() << '\n';
  os << "certification: " << (cg.verified ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace orient
