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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/dominance.hpp"
#include "orient/graph.hpp"

namespace orient {

// Target (n, k, s, b): n vertices, exactly k weak kings, s weak serfs, b of
// them both. Normalised so that k >= s.
struct NksbSpec {
  int n = 1;
  int k = 1;
  int s = 1;
  int b = 1;

  // Throws BadParams unless n >= k >= s >= b >= 0 and n >= 1.
  void validate() const;
};

// What a generator promises. Unset fields are not checked.
struct Claim {
  std::string description;
  std::optional<VertexSet> kings;
  std::optional<VertexSet> weak_kings;
  std::optional<VertexSet> weak_serfs;
  std::optional<int> weak_king_count;
  std::optional<KsbTriple> counts;

  bool matches(const DominanceReport& report) const;
};

struct CertifiedGraph {
  OrientedGraph graph;
  DominanceReport report;
  Claim claimed;
  bool verified = false;
  // labels[v - 1] names vertex v after the construction (x, y, u1, ...).
  std::vector<std::string> labels;
};

CertifiedGraph certify(OrientedGraph graph, Claim claim, std::vector<std::string> labels = {});

// Exactly k weak kings on n vertices, 1 <= k <= n. Vertex order is x, y,
// u1..u(n-2). Throws BadParams, or ConstructionInvalid if certification fails.
CertifiedGraph weak_kings_exact(int n, int k);

// Which vertices v1 beats besides v2 in the two-kings construction.
enum class TwoKingsReading {
  AllButThird,  // v1 -> v_i for i = 2 and every i >= 4
  EvenOnly,     // v1 -> v_i for even i only
};

// The printed two-kings arc set, certified against kings = {v1, v3}. The
// report holds the king set actually computed. Throws BadParams for n < 4.
CertifiedGraph two_kings_oriented(int n, TwoKingsReading reading = TwoKingsReading::AllButThird);

enum class NksbMode { Verbatim, CertifiedSearch };

struct SearchOptions {
  int workers = 1;
  // Local-search steps for orders beyond exhaustive reach.
  std::uint64_t step_budget = 2'000'000;
  std::uint64_t seed = 0x5eed'0f'0a'e1ULL;
};

// Largest order handled by exhaustive certified search.
inline constexpr int kExhaustiveSearchCeiling = 5;

// Verbatim: the three-block construction (weak kings only, shared block,
// weak serfs only), certified against (k, s, b); verified may be false.
// Requires s > b, k - b >= 2, b = 0 or b >= 2, and n = k + s - b, otherwise
// UnsupportedSpec.
// Certified search: exhaustive for n <= kExhaustiveSearchCeiling (NotFound
// when no graph exists), seeded local search above (BudgetExhausted).
CertifiedGraph nksb_oriented(const NksbSpec& spec, NksbMode mode, const SearchOptions& options = {});

// Embeds d into a graph on 2n vertices whose weak kings are exactly the
// original vertices 1..n: a copy n+1..2n of d, arcs i -> n+j for i != j, and
// n+i -> i. Throws TooSmall for n < 3, TransmitterPresent.
CertifiedGraph all_weak_kings_embedding(const OrientedGraph& d);

// Deterministic text summary of a certified construction.
std::string format_certification(const CertifiedGraph& cg);

}  // namespace orient
