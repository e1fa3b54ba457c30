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

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "orient/dominance.hpp"
#include "orient/graph.hpp"

namespace orient {

// Base-3 code of an oriented graph. Unordered pairs (i, j), i < j, are taken
// in lexicographic order with index p from 0; trit p is 0 for a tie, 1 for
// i->j and 2 for j->i, and value = sum of trit_p * 3^p.
struct GraphCode {
  int n = 0;
  std::uint64_t value = 0;

  friend auto operator<=>(const GraphCode&, const GraphCode&) = default;
};

// Largest order whose code space fits in 64 bits.
inline constexpr int kMaxCodeVertices = 9;
// Largest order for full oriented-graph enumeration (3^15 codes).
inline constexpr int kEnumerationCeiling = 6;
// Largest order for tournament enumeration (2^21 tournaments).
inline constexpr int kTournamentCeiling = 7;

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

// 3^C(n,2). Throws TooLarge beyond kMaxCodeVertices.
std::uint64_t code_space(int n);

GraphCode encode(const OrientedGraph& g);
// Throws CodeOutOfRange.
OrientedGraph decode(GraphCode code);

// Half-open range [begin, end) of code values.
struct CodeRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end > begin ? end - begin : 0; }
};

// Splits [0, total) into `parts` contiguous, ordered, near-equal ranges.
std::vector<CodeRange> partition(std::uint64_t total, int parts);

// Incremental decoder: walks consecutive codes, updating only the pairs whose
// trits change.
class CodeCursor {
 public:
  CodeCursor(int n, std::uint64_t start);

  const OrientedGraph& graph() const noexcept { return graph_; }
  GraphCode code() const noexcept { return {n_, value_}; }
  void advance();

 private:
  void set_pair(int p, int trit);

  int n_;
  std::uint64_t value_;
  std::vector<std::uint8_t> trits_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  OrientedGraph graph_;
};

void check_enumerable(int n);

// Calls visit(graph, code) once for every code in `range`, in order.
template <typename Visitor>
void enumerate_all(int n, CodeRange range, Visitor&& visit) {
  check_enumerable(n);
  range.end = std::min(range.end, code_space(n));
  if (range.size() == 0) return;
  CodeCursor cursor(n, range.begin);
  for (std::uint64_t c = range.begin; c < range.end; ++c) {
    if (c != range.begin) cursor.advance();
    visit(cursor.graph(), cursor.code());
  }
}

// Runs one accumulator per range on its own thread and merges them in range
// order, so the result does not depend on the worker count provided
// Acc::merge is associative. Acc needs a default constructor and merge().
template <typename Acc, typename RangeFn>
Acc reduce_ranges(std::uint64_t total, int workers, RangeFn scan) {
  const auto ranges = partition(total, std::max(1, workers));
  std::vector<Acc> parts(ranges.size());
  if (ranges.size() == 1) {
    scan(ranges[0], parts[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      threads.emplace_back([&, i] { scan(ranges[i], parts[i]); });
    }
  }
  Acc result;
  for (Acc& part : parts) result.merge(part);
  return result;
}

// visit(acc, graph, code) over every labeled oriented graph of order n.
template <typename Acc, typename Visit>
Acc reduce_graphs(int n, int workers, Visit visit) {
  check_enumerable(n);
  return reduce_ranges<Acc>(code_space(n), workers, [&](CodeRange r, Acc& acc) {
    enumerate_all(n, r, [&](const OrientedGraph& g, GraphCode c) { visit(acc, g, c); });
  });
}

// Tournament with arc-direction bits `bits`: bit p clear means i->j for pair
// p, set means j->i.
OrientedGraph tournament_from_bits(int n, std::uint64_t bits);
std::uint64_t tournament_count(int n);

template <typename Acc, typename Visit>
Acc reduce_tournaments(int n, int workers, Visit visit) {
  const std::uint64_t total = tournament_count(n);
  return reduce_ranges<Acc>(total, workers, [&](CodeRange r, Acc& acc) {
    for (std::uint64_t bits = r.begin; bits < r.end; ++bits) {
      const OrientedGraph g = tournament_from_bits(n, bits);
      visit(acc, g, encode(g));
    }
  });
}

struct RealizabilityTable {
  int n = 0;
  // Each realized (k, s, b) with its smallest witness code.
  std::map<KsbTriple, GraphCode> witnesses;

  bool contains(const KsbTriple& t) const { return witnesses.contains(t); }
};

RealizabilityTable realizability_table(int n, int workers = 1);

// Smallest-code tournament with exactly k kings. Throws TooLarge or BadParams.
std::optional<GraphCode> find_tournament_with_k_kings(int n, int k, int workers = 1);

// Smallest-code graph of order n with the given (k, s, b) counts.
std::optional<GraphCode> find_ksb_exhaustive(int n, const KsbTriple& target, int workers = 1);

// A graph W together with its weak-king set S such that the subgraph induced
// by S has a transmitter: the all-weak-kings embedding has no converse.
struct EmbeddingConverseWitness {
  GraphCode code;
  VertexSet weak_kings;
  Vertex transmitter;  // a vertex of S with no in-arc from S
};

// Scans n = 1..n_max in code order. With proper_subset set, only weak-king
// sets strictly smaller than the vertex set qualify.
std::optional<EmbeddingConverseWitness> find_embedding_converse_witness(int n_max,
                                                                        bool proper_subset = true);

// Each pair is a tie with probability tie_probability, otherwise an arc in a
// uniformly random direction.
OrientedGraph random_graph(int n, double tie_probability, std::mt19937_64& rng);

}  // namespace orient
