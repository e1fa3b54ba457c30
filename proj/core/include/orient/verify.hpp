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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orient/enumerate.hpp"

namespace orient {

enum class ClaimId {
  T4,       // every vertex is weakly reachable from a maximum-score vertex (pairwise witnesses)
  T5,       // every maximum-score vertex is a weak king
  T6,       // transmitter-free graphs have at least three weak kings
  T8,       // no graph with n > k and s = b > 0
  L1,       // Lemma-1 witnesses exist on both sides
  Moon,     // no tournament has exactly two kings
  K4,       // no 4-vertex oriented graph has exactly four kings
  T1Ex,     // tournament king counts: k = 2 and n = k = 4 impossible, all else realized
  Dual,     // weak serfs / serfs are weak kings / kings of the converse
  Score,    // degree and score identities
  MaxKing,  // every maximum-score vertex is a king (false for oriented graphs)
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::T4,  ClaimId::T5,   ClaimId::T6,   ClaimId::T8,    ClaimId::L1,      ClaimId::Moon,
    ClaimId::K4,  ClaimId::T1Ex, ClaimId::Dual, ClaimId::Score, ClaimId::MaxKing,
};

std::string_view to_string(ClaimId id) noexcept;
std::string_view statement(ClaimId id) noexcept;
// Case-insensitive; throws UnknownClaim.
ClaimId parse_claim(std::string_view name);

struct Counterexample {
  GraphCode code;
  std::string diagnostic;
};

struct VerificationReport {
  ClaimId claim = ClaimId::T5;
  int n_min = 1;
  int n_max = 1;
  bool tournaments_only = false;
  std::uint64_t scanned = 0;
  // Exact count; `counterexamples` holds only the first max_counterexamples.
  std::uint64_t counterexample_total = 0;
  std::vector<Counterexample> counterexamples;
  // Configurations the claim says must exist but the scan did not find.
  std::vector<std::string> missing;
  std::vector<std::string> notes;
  std::chrono::duration<double, std::milli> elapsed{};

  bool certified() const noexcept { return counterexample_total == 0 && missing.empty(); }
};

struct VerifyOptions {
  int workers = 1;
  std::size_t max_counterexamples = 100;
};

// Scans every labeled graph (every tournament for Moon and T1Ex) with order
// up to n_max; K4 always scans order 4. Throws TooLarge or BadParams.
VerificationReport verify_claim(ClaimId id, int n_max, const VerifyOptions& options = {});

// Diagnostic for a graph violating a per-graph claim, or nothing.
std::optional<std::string> check_graph(ClaimId id, const OrientedGraph& g);

// Header, notes, then one line per counterexample:
//   n=<n> code=<code> arcs=<a>b,... : <diagnostic>
std::string format_report(const VerificationReport& report, bool include_timing = true);

std::string format_arcs(const OrientedGraph& g);

}  // namespace orient
