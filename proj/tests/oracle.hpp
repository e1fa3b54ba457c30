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

// Brute-force reference implementations used only by tests. They read the
// graph solely through relation() and never touch the mask-based code paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "orient/graph.hpp"

namespace orient::oracle {

inline bool beats(const OrientedGraph& g, Vertex a, Vertex b) {
  return a != b && g.relation(a, b) == Relation::Forward;
}

inline bool tied(const OrientedGraph& g, Vertex a, Vertex b) {
  return a != b && g.relation(a, b) == Relation::Tie;
}

// The five forms, spelled out one by one.
inline bool weakly_reaches(const OrientedGraph& g, Vertex u, Vertex v) {
  if (beats(g, u, v) || tied(g, u, v)) return true;
  for (Vertex w = 1; w <= g.order(); ++w) {
    if (w == u || w == v) continue;
    if (beats(g, u, w) && beats(g, w, v)) return true;
    if (beats(g, u, w) && tied(g, w, v)) return true;
    if (tied(g, u, w) && beats(g, w, v)) return true;
  }
  return false;
}

// Shortest directed distance by BFS over relation(); -1 if unreachable.
inline int distance(const OrientedGraph& g, Vertex u, Vertex v) {
  std::vector<int> dist(g.order() + 1, -1);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b = 1; b <= g.order(); ++b) {
      if (dist[b] < 0 && beats(g, a, b)) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist[v];
}

inline std::vector<Vertex> weak_kings(const OrientedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    bool all = true;
    for (Vertex v = 1; v <= g.order() && all; ++v) all = v == u || weakly_reaches(g, u, v);
    if (all) out.push_back(u);
  }
  return out;
}

inline std::vector<Vertex> weak_serfs(const OrientedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    bool all = true;
    for (Vertex v = 1; v <= g.order() && all; ++v) all = v == u || weakly_reaches(g, v, u);
    if (all) out.push_back(u);
  }
  return out;
}

inline std::vector<Vertex> r_kings(const OrientedGraph& g, int r) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    bool all = true;
    for (Vertex v = 1; v <= g.order() && all; ++v) {
      if (v == u) continue;
      const int d = distance(g, u, v);
      all = d >= 1 && d <= r;
    }
    if (all) out.push_back(u);
  }
  return out;
}

inline std::vector<Vertex> serfs(const OrientedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    bool all = true;
    for (Vertex v = 1; v <= g.order() && all; ++v) {
      if (v == u) continue;
      const int d = distance(g, v, u);
      all = d >= 1 && d <= 2;
    }
    if (all) out.push_back(u);
  }
  return out;
}

inline int score(const OrientedGraph& g, Vertex v) {
  int s = 0;
  for (Vertex w = 1; w <= g.order(); ++w) {
    if (w == v) continue;
    s += beats(g, v, w) ? 2 : tied(g, v, w) ? 1 : 0;
  }
  return s;
}

// Relation code of (a, b): 1 for a(1-0)b, 0 for a(0-0)b, -1 for a(0-1)b.
inline int rel(const OrientedGraph& g, Vertex a, Vertex b) {
  return beats(g, a, b) ? 1 : beats(g, b, a) ? -1 : 0;
}

// The intransitive forms exactly as listed, written as (u,v), (v,w), (w,u)
// relations: u(1-0)v(1-0)w(1-0)u, u(1-0)v(1-0)w(0-0)u, u(0-0)v(1-0)w(1-0)u,
// u(1-0)v(0-0)w(1-0)u. A triple is intransitive when some labelling of its
// three vertices matches one of them.
inline bool intransitive(const OrientedGraph& g, Vertex a, Vertex b, Vertex c) {
  static constexpr std::array<std::array<int, 3>, 4> kForms = {{
      {1, 1, 1},
      {1, 1, 0},
      {0, 1, 1},
      {1, 0, 1},
  }};
  std::array<Vertex, 3> p = {a, b, c};
  std::sort(p.begin(), p.end());
  do {
    const std::array<int, 3> seen = {rel(g, p[0], p[1]), rel(g, p[1], p[2]), rel(g, p[2], p[0])};
    for (const auto& form : kForms) {
      if (form == seen) return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Literal base-3 evaluation with an explicit power table.
inline std::uint64_t code_of(const OrientedGraph& g) {
  std::uint64_t code = 0;
  std::uint64_t power = 1;
  for (Vertex i = 1; i <= g.order(); ++i) {
    for (Vertex j = i + 1; j <= g.order(); ++j) {
      const Relation r = g.relation(i, j);
      const std::uint64_t trit = r == Relation::Tie ? 0 : r == Relation::Forward ? 1 : 2;
      code += trit * power;
      power *= 3;
    }
  }
  return code;
}

}  // namespace orient::oracle
