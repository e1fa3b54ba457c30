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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "golden.hpp"
#include "oracle.hpp"
#include "orient/enumerate.hpp"
#include "orient/error.hpp"

namespace orient {
namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::NotFound;
}

TEST(WeakKingsExact, EveryOrderUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const CertifiedGraph cg = weak_kings_exact(n, k);
      ASSERT_TRUE(cg.verified) << n << ' ' << k;
      ASSERT_EQ(cg.graph.order(), n);
      ASSERT_EQ(static_cast<int>(oracle::weak_kings(cg.graph).size()), k) << n << ' ' << k;
      ASSERT_EQ(cg.labels.size(), static_cast<std::size_t>(n));
    }
  }
}

TEST(WeakKingsExact, SixVertexExamples) {
  // x, y, u1, u2, u4 for (6, 5); x, y, u4 for (6, 3).
  const CertifiedGraph five = weak_kings_exact(6, 5);
  EXPECT_EQ(five.report.weak_kings, (VertexSet{1, 2, 3, 4, 6}));
  EXPECT_EQ(five.labels, (std::vector<std::string>{"x", "y", "u1", "u2", "u3", "u4"}));
  EXPECT_EQ(weak_kings_exact(6, 3).report.weak_kings, (VertexSet{1, 2, 6}));
  EXPECT_EQ(weak_kings_exact(6, 4).report.weak_kings, (VertexSet{1, 2, 3, 6}));
  EXPECT_EQ(weak_kings_exact(6, 2).report.weak_kings, (VertexSet{1, 2}));
  const CertifiedGraph four = weak_kings_exact(4, 4);
  EXPECT_EQ(four.report.weak_kings.size(), 4);
  EXPECT_EQ(four.report.weak_serfs.size(), 4);
  EXPECT_EQ(weak_kings_exact(1, 1).report.weak_kings, VertexSet{1});
}

TEST(WeakKingsExact, BadParams) {
  EXPECT_EQ(error_of([] { weak_kings_exact(3, 4); }), ErrorCode::BadParams);
  EXPECT_EQ(error_of([] { weak_kings_exact(3, 0); }), ErrorCode::BadParams);
}

TEST(TwoKings, CertificationIsRecordedNotAssumed) {
  const CertifiedGraph cg = two_kings_oriented(4);
  EXPECT_TRUE((VertexSet{1, 3}).is_subset_of(cg.report.kings));
  EXPECT_EQ(cg.report.kings, (VertexSet{1, 2, 3}));
  EXPECT_FALSE(cg.verified);
  EXPECT_EQ(cg.graph.arcs(), (std::vector<Arc>{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 1}}));
  EXPECT_EQ(error_of([] { two_kings_oriented(3); }), ErrorCode::BadParams);
}

TEST(TwoKings, ReadingsDifferOnlyInOddTargets) {
  const OrientedGraph all = two_kings_oriented(7, TwoKingsReading::AllButThird).graph;
  const OrientedGraph even = two_kings_oriented(7, TwoKingsReading::EvenOnly).graph;
  EXPECT_TRUE(all.has_arc(1, 5));
  EXPECT_FALSE(even.has_arc(1, 5));
  EXPECT_EQ(even.relation(1, 5), Relation::Tie);
  EXPECT_TRUE(even.has_arc(1, 6));
}

TEST(NksbVerbatim, Examples) {
  const CertifiedGraph big = nksb_oriented({8, 6, 4, 2}, NksbMode::Verbatim);
  EXPECT_EQ(big.claimed.weak_kings, VertexSet::range(1, 6));
  EXPECT_EQ(big.labels,
            (std::vector<std::string>{"x1", "y1", "u1", "u2", "x2", "y2", "z1", "z2"}));
  EXPECT_EQ(big.verified, big.claimed.matches(analyze(big.graph)));

  const CertifiedGraph small = nksb_oriented({5, 4, 3, 2}, NksbMode::Verbatim);
  EXPECT_FALSE(small.verified);
  EXPECT_FALSE(small.report.weak_kings.contains(4));  // y2

  EXPECT_TRUE(nksb_oriented({4, 2, 2, 0}, NksbMode::Verbatim).verified);
}

TEST(NksbVerbatim, RejectsUnsupportedSpecs) {
  EXPECT_EQ(error_of([] { nksb_oriented({10, 7, 5, 4}, NksbMode::Verbatim); }),
            ErrorCode::UnsupportedSpec);
  EXPECT_EQ(error_of([] { nksb_oriented({6, 4, 3, 1}, NksbMode::Verbatim); }),
            ErrorCode::UnsupportedSpec);
  EXPECT_EQ(error_of([] { nksb_oriented({4, 4, 4, 4}, NksbMode::Verbatim); }),
            ErrorCode::UnsupportedSpec);
  EXPECT_EQ(error_of([] { nksb_oriented({4, 2, 3, 0}, NksbMode::Verbatim); }),
            ErrorCode::BadParams);
}

TEST(NksbVerbatim, Deterministic) {
  for (const NksbSpec& spec : golden::verbatim_specs(8)) {
    const CertifiedGraph a = nksb_oriented(spec, NksbMode::Verbatim);
    const CertifiedGraph b = nksb_oriented(spec, NksbMode::Verbatim);
    ASSERT_EQ(a.graph, b.graph);
    ASSERT_EQ(a.report, b.report);
    ASSERT_EQ(a.graph.order(), spec.n);
  }
}

TEST(NksbSearch, RealizableTriplesAreFound) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [t, code] : realizability_table(n).witnesses) {
      if (t.k < t.s) continue;
      const CertifiedGraph cg = nksb_oriented({n, t.k, t.s, t.b}, NksbMode::CertifiedSearch);
      ASSERT_TRUE(cg.verified);
      ASSERT_EQ(cg.report.counts(), t);
    }
  }
}

TEST(NksbSearch, ExcludedTupleIsNotFound) {
  EXPECT_EQ(error_of([] { nksb_oriented({5, 4, 4, 4}, NksbMode::CertifiedSearch); }),
            ErrorCode::NotFound);
}

TEST(NksbSearch, LocalSearchBeyondExhaustiveRange) {
  SearchOptions options;
  options.step_budget = 200'000;
  const CertifiedGraph cg = nksb_oriented({7, 4, 3, 1}, NksbMode::CertifiedSearch, options);
  EXPECT_TRUE(cg.verified);
  EXPECT_EQ(cg.report.counts(), (KsbTriple{4, 3, 1}));
  EXPECT_EQ(error_of([] { nksb_oriented({7, 5, 4, 1}, NksbMode::CertifiedSearch); }),
            ErrorCode::NotFound);
}

TEST(Embedding, ThreeCycle) {
  const CertifiedGraph cg = all_weak_kings_embedding(fixtures::c3());
  EXPECT_TRUE(cg.verified);
  EXPECT_EQ(cg.graph.order(), 6);
  EXPECT_EQ(cg.report.weak_kings, (VertexSet{1, 2, 3}));
  EXPECT_EQ(cg.graph.induced(VertexSet{1, 2, 3}), fixtures::c3());
  EXPECT_EQ(cg.graph.induced(VertexSet{4, 5, 6}), fixtures::c3());
}

TEST(Embedding, Errors) {
  EXPECT_EQ(error_of([] { all_weak_kings_embedding(fixtures::transitive3()); }),
            ErrorCode::TransmitterPresent);
  EXPECT_EQ(error_of([] { all_weak_kings_embedding(OrientedGraph::build(2, {{1, 2}})); }),
            ErrorCode::TooSmall);
}

TEST(Embedding, EveryTransmitterFreeGraphOfOrderThreeAndFour) {
  int embedded = 0;
  for (int n = 3; n <= 4; ++n) {
    for (const OrientedGraph& d : fixtures::all_graphs(n)) {
      if (!transmitters(d).empty()) continue;
      const CertifiedGraph cg = all_weak_kings_embedding(d);
      ASSERT_TRUE(cg.verified);
      ASSERT_EQ(cg.graph.induced(VertexSet::range(1, n)), d);
      ++embedded;
    }
  }
  EXPECT_GT(embedded, 0);
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(ORIENT_GOLDEN_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void check_golden(const std::string& name, const std::string& actual) {
  if (std::getenv("ORIENT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(std::string(ORIENT_GOLDEN_DIR) + "/" + name) << actual;
  }
  EXPECT_EQ(actual, read_golden(name)) << "golden file " << name << " is stale";
}

TEST(Golden, TwoKingsReports) { check_golden("two_kings.txt", golden::two_kings_report()); }

TEST(Golden, NksbVerbatimReports) {
  check_golden("nksb_verbatim.txt", golden::nksb_verbatim_report());
}

}  // namespace
}  // namespace orient
