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

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace orient {

// Vertices are 1-based: a graph of order n has vertices 1..n.
using Vertex = int;

// Bit (v - 1) of a mask stands for vertex v.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask vertex_bit(Vertex v) noexcept { return Mask{1} << (v - 1); }

constexpr Mask full_mask(int n) noexcept {
  return n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Relation of the ordered pair (u, v).
//   Forward  - arc u -> v, written u(1-0)v
//   Backward - arc v -> u, written u(0-1)v
//   Tie      - no arc either way, written u(0-0)v
enum class Relation : std::uint8_t { Tie = 0, Forward = 1, Backward = 2 };

constexpr Relation reversed(Relation r) noexcept {
  switch (r) {
    case Relation::Forward: return Relation::Backward;
    case Relation::Backward: return Relation::Forward;
    case Relation::Tie: break;
  }
  return Relation::Tie;
}

// Ordered set of vertices backed by a bit mask. Iteration is ascending.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices);

  static VertexSet range(Vertex first, Vertex last);

  constexpr Mask mask() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(Vertex v) const noexcept {
    return v >= 1 && v <= kMaxVertices && (bits_ & vertex_bit(v)) != 0;
  }
  bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  void insert(Vertex v) { bits_ |= vertex_bit(v); }
  void erase(Vertex v) { bits_ &= ~vertex_bit(v); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;

  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  Mask bits_ = 0;
};

// Prints as "{1, 3, 4}".
std::ostream& operator<<(std::ostream& os, VertexSet set);

struct Arc {
  Vertex from;
  Vertex to;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::ostream& operator<<(std::ostream& os, const Arc& arc);

// An oriented graph: every unordered pair of distinct vertices is an arc one
// way, an arc the other way, or a tie. Values are immutable after
// construction; all factories validate their input.
class OrientedGraph {
 public:
  // Unlisted pairs are ties. Throws OutOfRange, SelfLoop or ConflictingPair.
  static OrientedGraph build(int n, std::span<const Arc> arcs);
  static OrientedGraph build(int n, std::initializer_list<Arc> arcs);

  static OrientedGraph null_graph(int n);

  // out[v - 1] is the out-neighbourhood of v. Throws on loops, symmetric
  // pairs or bits beyond n.
  static OrientedGraph from_out_masks(int n, std::span<const Mask> out);

  int order() const noexcept { return n_; }
  Mask all() const noexcept { return full_mask(n_); }

  // Unchecked accessors; v must be in 1..order().
  Mask out_mask(Vertex v) const noexcept { return out_[v - 1]; }
  Mask in_mask(Vertex v) const noexcept { return in_[v - 1]; }
  Mask tie_mask(Vertex v) const noexcept {
    return full_mask(n_) & ~(out_[v - 1] | in_[v - 1] | vertex_bit(v));
  }

  // Throws OutOfRange or SameVertex.
  Relation relation(Vertex u, Vertex v) const;

  bool has_arc(Vertex u, Vertex v) const noexcept { return (out_[u - 1] & vertex_bit(v)) != 0; }

  // Arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;
  int arc_count() const noexcept;
  int tie_count() const noexcept;

  OrientedGraph converse() const;

  // Subgraph induced by `keep`, relabelled 1..|keep| in ascending order.
  OrientedGraph induced(VertexSet keep) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b);

 private:
  friend class CodeCursor;

  OrientedGraph() = default;

  int n_ = 0;
  std::array<Mask, kMaxVertices> out_{};
  std::array<Mask, kMaxVertices> in_{};
};

struct VertexReport {
  Vertex vertex;
  int out_degree;
  int in_degree;
  int tie_degree;
  int score;

  friend bool operator==(const VertexReport&, const VertexReport&) = default;
};

// Two points per win, one per tie: s(v) = 2 d+(v) + d*(v) = n - 1 + d+(v) - d-(v).
int score(const OrientedGraph& g, Vertex v);
VertexReport vertex_report(const OrientedGraph& g, Vertex v);
std::vector<VertexReport> vertex_reports(const OrientedGraph& g);

struct ScoreSequence {
  std::vector<int> scores;  // nondecreasing

  long long total() const noexcept;
  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;
};

ScoreSequence score_sequence(const OrientedGraph& g);
VertexSet max_score_vertices(const OrientedGraph& g);

// Vertices of indegree zero. Ties are not in-arcs.
VertexSet transmitters(const OrientedGraph& g);
bool is_tournament(const OrientedGraph& g);

}  // namespace orient
