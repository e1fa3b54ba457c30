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

#include "orient/enumerate.hpp"

#include <string>

#include "orient/error.hpp"

namespace orient {

std::uint64_t code_space(int n) {
  if (n < 1 || n > kMaxCodeVertices) {
    throw Error(ErrorCode::TooLarge, "graph codes support orders 1.." +
                                         std::to_string(kMaxCodeVertices) + ", got " +
                                         std::to_string(n));
  }
  std::uint64_t total = 1;
  for (int p = 0; p < pair_count(n); ++p) total *= 3;
  return total;
}

void check_enumerable(int n) {
  if (n < 1 || n > kEnumerationCeiling) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration supports orders 1.." +
                                         std::to_string(kEnumerationCeiling) + ", got " +
                                         std::to_string(n));
  }
}

GraphCode encode(const OrientedGraph& g) {
  const int n = g.order();
  code_space(n);
  std::uint64_t value = 0;
  std::uint64_t place = 1;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (g.has_arc(i, j)) {
        value += place;
      } else if (g.has_arc(j, i)) {
        value += 2 * place;
      }
      place *= 3;
    }
  }
  return {n, value};
}

OrientedGraph decode(GraphCode code) {
  if (code.n < 1 || code.n > kMaxCodeVertices) {
    throw Error(ErrorCode::CodeOutOfRange, "unsupported order " + std::to_string(code.n));
  }
  if (code.value >= code_space(code.n)) {
    throw Error(ErrorCode::CodeOutOfRange, "code " + std::to_string(code.value) +
                                               " not below 3^" +
                                               std::to_string(pair_count(code.n)));
  }
  const int n = code.n;
  std::vector<Mask> out(n, 0);
  std::uint64_t rest = code.value;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const auto trit = rest % 3;
      rest /= 3;
      if (trit == 1) out[i - 1] |= vertex_bit(j);
      if (trit == 2) out[j - 1] |= vertex_bit(i);
    }
  }
  return OrientedGraph::from_out_masks(n, out);
}

std::vector<CodeRange> partition(std::uint64_t total, int parts) {
  parts = std::max(1, parts);
  if (total < static_cast<std::uint64_t>(parts)) parts = static_cast<int>(std::max<std::uint64_t>(total, 1));
  std::vector<CodeRange> ranges;
  ranges.reserve(parts);
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (int i = 0; i < parts; ++i) {
    const std::uint64_t len = base + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
    ranges.push_back({begin, begin + len});
    begin += len;
  }
  return ranges;
}

CodeCursor::CodeCursor(int n, std::uint64_t start)
    : n_(n), value_(start), trits_(pair_count(n), 0), graph_(decode({n, start})) {
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
  }
  std::uint64_t rest = start;
  for (auto& t : trits_) {
    t = static_cast<std::uint8_t>(rest % 3);
    rest /= 3;
  }
}

void CodeCursor::set_pair(int p, int trit) {
  const auto [i, j] = pairs_[p];
  auto& out = graph_.out_;
  auto& in = graph_.in_;
  out[i - 1] &= ~vertex_bit(j);
  out[j - 1] &= ~vertex_bit(i);
  in[i - 1] &= ~vertex_bit(j);
  in[j - 1] &= ~vertex_bit(i);
  if (trit == 1) {
    out[i - 1] |= vertex_bit(j);
    in[j - 1] |= vertex_bit(i);
  } else if (trit == 2) {
    out[j - 1] |= vertex_bit(i);
    in[i - 1] |= vertex_bit(j);
  }
}

void CodeCursor::advance() {
  ++value_;
  for (std::size_t p = 0; p < trits_.size(); ++p) {
    if (trits_[p] < 2) {
      ++trits_[p];
      set_pair(static_cast<int>(p), trits_[p]);
      return;
    }
    trits_[p] = 0;
    set_pair(static_cast<int>(p), 0);
  }
}

std::uint64_t tournament_count(int n) {
  if (n < 1 || n > kTournamentCeiling) {
    throw Error(ErrorCode::TooLarge, "tournament enumeration supports orders 1.." +
                                         std::to_string(kTournamentCeiling) + ", got " +
                                         std::to_string(n));
  }
  return std::uint64_t{1} << pair_count(n);
}

OrientedGraph tournament_from_bits(int n, std::uint64_t bits) {
  std::vector<Mask> out(n, 0);
  int p = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++p) {
      if ((bits >> p) & 1U) {
        out[j - 1] |= vertex_bit(i);
      } else {
        out[i - 1] |= vertex_bit(j);
      }
    }
  }
  return OrientedGraph::from_out_masks(n, out);
}

namespace {

struct TableAcc {
  std::map<KsbTriple, GraphCode> witnesses;

  void merge(const TableAcc& other) {
    for (const auto& [triple, code] : other.witnesses) {
      auto [it, inserted] = witnesses.emplace(triple, code);
      if (!inserted && code < it->second) it->second = code;
    }
  }
};

struct FirstAcc {
  std::optional<GraphCode> found;

  void merge(const FirstAcc& other) {
    if (other.found && (!found || *other.found < *found)) found = other.found;
  }
};

}  // namespace

RealizabilityTable realizability_table(int n, int workers) {
  auto acc = reduce_graphs<TableAcc>(n, workers, [](TableAcc& a, const OrientedGraph& g,
                                                    GraphCode c) {
    const VertexSet wk = weak_kings(g);
    const VertexSet ws = weak_serfs(g);
    a.witnesses.emplace(KsbTriple{wk.size(), ws.size(), (wk & ws).size()}, c);
  });
  return {n, std::move(acc.witnesses)};
}

std::optional<GraphCode> find_tournament_with_k_kings(int n, int k, int workers) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::BadParams, "need 1 <= k <= n, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
  }
  auto acc = reduce_tournaments<FirstAcc>(n, workers, [k](FirstAcc& a, const OrientedGraph& g,
                                                          GraphCode c) {
    if (kings(g).size() != k) return;
    if (!a.found || c < *a.found) a.found = c;
  });
  return acc.found;
}

std::optional<GraphCode> find_ksb_exhaustive(int n, const KsbTriple& target, int workers) {
  auto acc = reduce_graphs<FirstAcc>(n, workers, [&](FirstAcc& a, const OrientedGraph& g,
                                                     GraphCode c) {
    if (a.found) return;
    const VertexSet wk = weak_kings(g);
    if (wk.size() != target.k) return;
    const VertexSet ws = weak_serfs(g);
    if (ws.size() != target.s || (wk & ws).size() != target.b) return;
    a.found = c;
  });
  return acc.found;
}

std::optional<EmbeddingConverseWitness> find_embedding_converse_witness(int n_max,
                                                                        bool proper_subset) {
  for (int n = 1; n <= n_max; ++n) {
    std::optional<EmbeddingConverseWitness> hit;
    enumerate_all(n, {0, code_space(n)}, [&](const OrientedGraph& g, GraphCode c) {
      if (hit) return;
      const VertexSet wk = weak_kings(g);
      if (proper_subset && wk.mask() == g.all()) return;
      for (Vertex v : wk) {
        if ((g.in_mask(v) & wk.mask()) == 0) {
          hit = EmbeddingConverseWitness{c, wk, v};
          return;
        }
      }
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

OrientedGraph random_graph(int n, double tie_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution tie(tie_probability);
  std::bernoulli_distribution forward(0.5);
  std::vector<Mask> out(n, 0);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (tie(rng)) continue;
      if (forward(rng)) {
        out[i - 1] |= vertex_bit(j);
      } else {
        out[j - 1] |= vertex_bit(i);
      }
    }
  }
  return OrientedGraph::from_out_masks(n, out);
}

}  // namespace orient
