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

#include "orient/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "orient/error.hpp"

namespace orient {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::OutOfRange,
                "graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) insert(v);
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet set;
  for (Vertex v = first; v <= last; ++v) set.insert(v);
  return set;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::ostream& operator<<(std::ostream& os, VertexSet set) {
  os << '{';
  bool first = true;
  for (Vertex v : set) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Arc& arc) {
  return os << arc.from << "->" << arc.to;
}

OrientedGraph OrientedGraph::build(int n, std::span<const Arc> arcs) {
  check_order(n);
  OrientedGraph g;
  g.n_ = n;
  for (const Arc& a : arcs) {
    if (a.from < 1 || a.from > n || a.to < 1 || a.to > n) {
      throw Error(ErrorCode::OutOfRange, "arc " + std::to_string(a.from) + "->" +
                                             std::to_string(a.to) + " outside 1.." +
                                             std::to_string(n));
    }
    if (a.from == a.to) {
      throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(a.from));
    }
    if (g.has_arc(a.to, a.from)) {
      throw Error(ErrorCode::ConflictingPair, "both " + std::to_string(a.from) + "->" +
                                                  std::to_string(a.to) + " and its reverse");
    }
    g.out_[a.from - 1] |= vertex_bit(a.to);
    g.in_[a.to - 1] |= vertex_bit(a.from);
  }
  return g;
}

OrientedGraph OrientedGraph::build(int n, std::initializer_list<Arc> arcs) {
  return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

OrientedGraph OrientedGraph::null_graph(int n) {
  check_order(n);
  OrientedGraph g;
  g.n_ = n;
  return g;
}

OrientedGraph OrientedGraph::from_out_masks(int n, std::span<const Mask> out) {
  check_order(n);
  if (out.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::OutOfRange, "expected one out-mask per vertex");
  }
  OrientedGraph g;
  g.n_ = n;
  const Mask all = full_mask(n);
  for (Vertex v = 1; v <= n; ++v) {
    const Mask m = out[v - 1];
    if ((m & ~all) != 0) throw Error(ErrorCode::OutOfRange, "out-mask has bits beyond n");
    if ((m & vertex_bit(v)) != 0) {
      throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(v));
    }
    g.out_[v - 1] = m;
  }
  for (Vertex v = 1; v <= n; ++v) {
    for (Mask rest = g.out_[v - 1]; rest != 0; rest &= rest - 1) {
      const Vertex w = std::countr_zero(rest) + 1;
      if ((g.out_[w - 1] & vertex_bit(v)) != 0) {
        throw Error(ErrorCode::ConflictingPair,
                    "symmetric pair " + std::to_string(v) + "," + std::to_string(w));
      }
      g.in_[w - 1] |= vertex_bit(v);
    }
  }
  return g;
}

void OrientedGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

Relation OrientedGraph::relation(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SameVertex, "relation of a vertex with itself");
  if (has_arc(u, v)) return Relation::Forward;
  if (has_arc(v, u)) return Relation::Backward;
  return Relation::Tie;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : VertexSet(out_[u - 1])) result.push_back({u, v});
  }
  return result;
}

int OrientedGraph::arc_count() const noexcept {
  int count = 0;
  for (int i = 0; i < n_; ++i) count += std::popcount(out_[i]);
  return count;
}

int OrientedGraph::tie_count() const noexcept { return n_ * (n_ - 1) / 2 - arc_count(); }

OrientedGraph OrientedGraph::converse() const {
  OrientedGraph g;
  g.n_ = n_;
  g.out_ = in_;
  g.in_ = out_;
  return g;
}

OrientedGraph OrientedGraph::induced(VertexSet keep) const {
  const std::vector<Vertex> kept = keep.to_vector();
  for (Vertex v : kept) check_vertex(v);
  const int m = static_cast<int>(kept.size());
  check_order(m);
  std::vector<Mask> out(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && has_arc(kept[i], kept[j])) out[i] |= vertex_bit(j + 1);
    }
  }
  return from_out_masks(m, out);
}

bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
  return a.n_ == b.n_ && std::equal(a.out_.begin(), a.out_.begin() + a.n_, b.out_.begin());
}

int score(const OrientedGraph& g, Vertex v) {
  g.check_vertex(v);
  return g.order() - 1 + std::popcount(g.out_mask(v)) - std::popcount(g.in_mask(v));
}

VertexReport vertex_report(const OrientedGraph& g, Vertex v) {
  g.check_vertex(v);
  VertexReport r{};
  r.vertex = v;
  r.out_degree = std::popcount(g.out_mask(v));
  r.in_degree = std::popcount(g.in_mask(v));
  r.tie_degree = std::popcount(g.tie_mask(v));
  r.score = 2 * r.out_degree + r.tie_degree;
  return r;
}

std::vector<VertexReport> vertex_reports(const OrientedGraph& g) {
  std::vector<VertexReport> reports;
  reports.reserve(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) reports.push_back(vertex_report(g, v));
  return reports;
}

long long ScoreSequence::total() const noexcept {
  long long sum = 0;
  for (int s : scores) sum += s;
  return sum;
}

ScoreSequence score_sequence(const OrientedGraph& g) {
  ScoreSequence seq;
  seq.scores.reserve(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) seq.scores.push_back(score(g, v));
  std::sort(seq.scores.begin(), seq.scores.end());
  return seq;
}

VertexSet max_score_vertices(const OrientedGraph& g) {
  VertexSet best;
  int best_score = -1;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int s = score(g, v);
    if (s > best_score) {
      best_score = s;
      best = VertexSet{v};
    } else if (s == best_score) {
      best.insert(v);
    }
  }
  return best;
}

VertexSet transmitters(const OrientedGraph& g) {
  VertexSet result;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.in_mask(v) == 0) result.insert(v);
  }
  return result;
}

bool is_tournament(const OrientedGraph& g) { return g.tie_count() == 0; }

}  // namespace orient
