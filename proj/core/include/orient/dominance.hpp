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

#include <compare>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "orient/graph.hpp"

namespace orient {

// The five ways v can be weakly reachable within two steps from u.
enum class WeakForm {
  DirectArc,  // u(1-0)v
  DirectTie,  // u(0-0)v
  ArcArc,     // u(1-0)w(1-0)v
  ArcTie,     // u(1-0)w(0-0)v
  TieArc,     // u(0-0)w(1-0)v
};

std::string_view to_string(WeakForm form) noexcept;

struct WeakPathWitness {
  WeakForm form;
  std::optional<Vertex> via;  // set for the two-step forms

  friend bool operator==(const WeakPathWitness&, const WeakPathWitness&) = default;
};

// Prefers the direct forms, then the lowest intermediate vertex. A tie
// followed by a tie is not weak reachability. Throws SameVertex when u == v.
std::optional<WeakPathWitness> weakly_reachable_within_two(const OrientedGraph& g, Vertex u,
                                                           Vertex v);

// u(1-0)v or u(1-0)w(1-0)v. Throws SameVertex when u == v.
bool reachable_within_two(const OrientedGraph& g, Vertex u, Vertex v);

// Mask forms of the two relations above, over all targets at once. The
// source's own bit is never set.
Mask weak_reach_mask(const OrientedGraph& g, Vertex u);
Mask strict_reach_mask(const OrientedGraph& g, Vertex u);
// Vertices from which u is weakly reachable within two steps.
Mask weak_coreach_mask(const OrientedGraph& g, Vertex u);
Mask strict_coreach_mask(const OrientedGraph& g, Vertex u);

VertexSet weak_kings(const OrientedGraph& g);
VertexSet weak_serfs(const OrientedGraph& g);
VertexSet kings(const OrientedGraph& g);
VertexSet serfs(const OrientedGraph& g);

// Vertices reaching every other vertex along a directed path of length at
// most `radius`. Throws BadRadius for radius < 1.
VertexSet r_kings(const OrientedGraph& g, int radius);

struct KsbTriple {
  int k = 0;  // weak kings
  int s = 0;  // weak serfs
  int b = 0;  // both

  friend auto operator<=>(const KsbTriple&, const KsbTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const KsbTriple& t);

struct DominanceReport {
  VertexSet kings;
  VertexSet serfs;
  VertexSet weak_kings;
  VertexSet weak_serfs;
  VertexSet transmitters;

  KsbTriple counts() const noexcept {
    return {weak_kings.size(), weak_serfs.size(), (weak_kings & weak_serfs).size()};
  }

  friend bool operator==(const DominanceReport&, const DominanceReport&) = default;
};

DominanceReport analyze(const OrientedGraph& g);

enum class TripleKind { Transitive, Intransitive };

std::string_view to_string(TripleKind kind) noexcept;

// Intransitive exactly when the triple is cyclically oriented: a directed
// 3-cycle, or a directed path x->y->z whose ends are tied. Everything else,
// including the all-tie triple, is transitive. Throws NotDistinct.
TripleKind classify_triple(const OrientedGraph& g, Vertex u, Vertex v, Vertex w);

bool is_transitive(const OrientedGraph& g);

struct TripleCensus {
  long long transitive = 0;
  long long intransitive = 0;
};

TripleCensus triple_census(const OrientedGraph& g);

// True when the pair {u, v} lies in at least one intransitive triple.
bool pair_in_intransitive_triple(const OrientedGraph& g, Vertex u, Vertex v);

enum class LemmaSide { KingSide, SerfSide };

// King side: for u not a weak king, the lowest v with v(1-0)u, v not a weak
// serf, and no intransitive triple through {v, u}. Serf side is the dual.
// Throws PreconditionViolated when u is a weak king (resp. weak serf).
// An empty result means the lemma failed on this input.
std::optional<Vertex> lemma1_witness(const OrientedGraph& g, Vertex u, LemmaSide side);

}  // namespace orient
