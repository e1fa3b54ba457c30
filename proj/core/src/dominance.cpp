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

#include "orient/dominance.hpp"

#include <ostream>
#include <string>

#include "orient/error.hpp"

namespace orient {

namespace {

void check_pair(const OrientedGraph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw Error(ErrorCode::SameVertex, "source and target coincide");
}

Mask union_of_outs(const OrientedGraph& g, Mask from) {
  Mask acc = 0;
  for (Vertex w : VertexSet(from)) acc |= g.out_mask(w);
  return acc;
}

Mask union_of_ins(const OrientedGraph& g, Mask from) {
  Mask acc = 0;
  for (Vertex w : VertexSet(from)) acc |= g.in_mask(w);
  return acc;
}

Mask union_of_ties(const OrientedGraph& g, Mask from) {
  Mask acc = 0;
  for (Vertex w : VertexSet(from)) acc |= g.tie_mask(w);
  return acc;
}

}  // namespace

std::string_view to_string(WeakForm form) noexcept {
  switch (form) {
    case WeakForm::DirectArc: return "direct-arc";
    case WeakForm::DirectTie: return "direct-tie";
    case WeakForm::ArcArc: return "arc-arc";
    case WeakForm::ArcTie: return "arc-tie";
    case WeakForm::TieArc: return "tie-arc";
  }
  return "?";
}

std::string_view to_string(TripleKind kind) noexcept {
  return kind == TripleKind::Transitive ? "transitive" : "intransitive";
}

std::ostream& operator<<(std::ostream& os, const KsbTriple& t) {
  return os << '(' << t.k << ", " << t.s << ", " << t.b << ')';
}

std::optional<WeakPathWitness> weakly_reachable_within_two(const OrientedGraph& g, Vertex u,
                                                           Vertex v) {
  check_pair(g, u, v);
  const Mask target = vertex_bit(v);
  if (g.out_mask(u) & target) return WeakPathWitness{WeakForm::DirectArc, std::nullopt};
  if (g.tie_mask(u) & target) return WeakPathWitness{WeakForm::DirectTie, std::nullopt};
  for (Vertex w = 1; w <= g.order(); ++w) {
    if (w == u || w == v) continue;
    const bool u_beats_w = g.has_arc(u, w);
    const bool u_ties_w = (g.tie_mask(u) & vertex_bit(w)) != 0;
    const bool w_beats_v = g.has_arc(w, v);
    const bool w_ties_v = (g.tie_mask(w) & target) != 0;
    if (u_beats_w && w_beats_v) return WeakPathWitness{WeakForm::ArcArc, w};
    if (u_beats_w && w_ties_v) return WeakPathWitness{WeakForm::ArcTie, w};
    if (u_ties_w && w_beats_v) return WeakPathWitness{WeakForm::TieArc, w};
  }
  return std::nullopt;
}

bool reachable_within_two(const OrientedGraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  return (strict_reach_mask(g, u) & vertex_bit(v)) != 0;
}

Mask weak_reach_mask(const OrientedGraph& g, Vertex u) {
  const Mask out = g.out_mask(u);
  const Mask tie = g.tie_mask(u);
  const Mask reach = out | tie | union_of_outs(g, out) | union_of_ties(g, out) |
                     union_of_outs(g, tie);
  return reach & ~vertex_bit(u);
}

Mask strict_reach_mask(const OrientedGraph& g, Vertex u) {
  const Mask out = g.out_mask(u);
  return (out | union_of_outs(g, out)) & ~vertex_bit(u);
}

Mask weak_coreach_mask(const OrientedGraph& g, Vertex u) {
  const Mask in = g.in_mask(u);
  const Mask tie = g.tie_mask(u);
  const Mask reach = in | tie | union_of_ins(g, in) | union_of_ties(g, in) | union_of_ins(g, tie);
  return reach & ~vertex_bit(u);
}

Mask strict_coreach_mask(const OrientedGraph& g, Vertex u) {
  const Mask in = g.in_mask(u);
  return (in | union_of_ins(g, in)) & ~vertex_bit(u);
}

namespace {

template <typename ReachFn>
VertexSet covering_vertices(const OrientedGraph& g, ReachFn reach) {
  VertexSet result;
  const Mask all = g.all();
  for (Vertex u = 1; u <= g.order(); ++u) {
    if ((reach(g, u) | vertex_bit(u)) == all) result.insert(u);
  }
  return result;
}

}  // namespace

VertexSet weak_kings(const OrientedGraph& g) { return covering_vertices(g, weak_reach_mask); }
VertexSet weak_serfs(const OrientedGraph& g) { return covering_vertices(g, weak_coreach_mask); }
VertexSet kings(const OrientedGraph& g) { return covering_vertices(g, strict_reach_mask); }
VertexSet serfs(const OrientedGraph& g) { return covering_vertices(g, strict_coreach_mask); }

VertexSet r_kings(const OrientedGraph& g, int radius) {
  if (radius < 1) {
    throw Error(ErrorCode::BadRadius, "radius must be at least 1, got " + std::to_string(radius));
  }
  VertexSet result;
  const Mask all = g.all();
  for (Vertex u = 1; u <= g.order(); ++u) {
    Mask seen = vertex_bit(u);
    Mask frontier = seen;
    for (int step = 0; step < radius && frontier != 0 && seen != all; ++step) {
      const Mask next = union_of_outs(g, frontier) & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen == all) result.insert(u);
  }
  return result;
}

DominanceReport analyze(const OrientedGraph& g) {
  DominanceReport r;
  r.kings = kings(g);
  r.serfs = serfs(g);
  r.weak_kings = weak_kings(g);
  r.weak_serfs = weak_serfs(g);
  r.transmitters = transmitters(g);
  return r;
}

TripleKind classify_triple(const OrientedGraph& g, Vertex u, Vertex v, Vertex w) {
  g.check_vertex(u);
  g.check_vertex(v);
  g.check_vertex(w);
  if (u == v || v == w || u == w) throw Error(ErrorCode::NotDistinct, "triple needs 3 vertices");
  // Orient each side of the cycle u, v, w: +1 along u->v->w->u, -1 against, 0 tie.
  auto along = [&](Vertex a, Vertex b) { return g.has_arc(a, b) ? 1 : g.has_arc(b, a) ? -1 : 0; };
  const int a = along(u, v);
  const int b = along(v, w);
  const int c = along(w, u);
  const int arcs = (a != 0) + (b != 0) + (c != 0);
  const int sum = a + b + c;
  // Cyclic: every arc points the same way around the cycle, with at most one tie.
  if (arcs == 3) return (sum == 3 || sum == -3) ? TripleKind::Intransitive : TripleKind::Transitive;
  if (arcs == 2) return (sum == 2 || sum == -2) ? TripleKind::Intransitive : TripleKind::Transitive;
  return TripleKind::Transitive;
}

bool is_transitive(const OrientedGraph& g) {
  const int n = g.order();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (pair_in_intransitive_triple(g, u, v)) return false;
    }
  }
  return true;
}

TripleCensus triple_census(const OrientedGraph& g) {
  TripleCensus census;
  const int n = g.order();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      for (Vertex w = v + 1; w <= n; ++w) {
        if (classify_triple(g, u, v, w) == TripleKind::Intransitive) {
          ++census.intransitive;
        } else {
          ++census.transitive;
        }
      }
    }
  }
  return census;
}

bool pair_in_intransitive_triple(const OrientedGraph& g, Vertex u, Vertex v) {
  for (Vertex x = 1; x <= g.order(); ++x) {
    if (x == u || x == v) continue;
    if (classify_triple(g, u, v, x) == TripleKind::Intransitive) return true;
  }
  return false;
}

std::optional<Vertex> lemma1_witness(const OrientedGraph& g, Vertex u, LemmaSide side) {
  g.check_vertex(u);
  const bool king_side = side == LemmaSide::KingSide;
  const VertexSet kings_or_serfs = king_side ? weak_kings(g) : weak_serfs(g);
  if (kings_or_serfs.contains(u)) {
    throw Error(ErrorCode::PreconditionViolated,
                "vertex " + std::to_string(u) +
                    (king_side ? " is already a weak king" : " is already a weak serf"));
  }
  const VertexSet excluded = king_side ? weak_serfs(g) : weak_kings(g);
  const Mask candidates = king_side ? g.in_mask(u) : g.out_mask(u);
  for (Vertex v : VertexSet(candidates)) {
    if (excluded.contains(v)) continue;
    if (pair_in_intransitive_triple(g, u, v)) continue;
    return v;
  }
  return std::nullopt;
}

}  // namespace orient
