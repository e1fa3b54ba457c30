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

#include <random>
#include <vector>

#include "orient/enumerate.hpp"
#include "orient/graph.hpp"

namespace orient::fixtures {

// D*: u1(1-0)u2, u2(1-0)u_i for i = 3, 4, 5, all other pairs tied.
inline OrientedGraph dstar() { return OrientedGraph::build(5, {{1, 2}, {2, 3}, {2, 4}, {2, 5}}); }

// Directed 3-cycle 1->2->3->1.
inline OrientedGraph c3() { return OrientedGraph::build(3, {{1, 2}, {2, 3}, {3, 1}}); }

inline OrientedGraph transitive3() { return OrientedGraph::build(3, {{1, 2}, {1, 3}, {2, 3}}); }

inline OrientedGraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) arcs.push_back({i, j});
  }
  return OrientedGraph::build(n, arcs);
}

// Every labeled graph of order n, in code order.
inline std::vector<OrientedGraph> all_graphs(int n) {
  std::vector<OrientedGraph> graphs;
  for (std::uint64_t c = 0; c < code_space(n); ++c) graphs.push_back(decode({n, c}));
  return graphs;
}

inline std::vector<OrientedGraph> random_graphs(int count, int n_min, int n_max,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(n_min, n_max);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<OrientedGraph> graphs;
  graphs.reserve(count);
  for (int i = 0; i < count; ++i) graphs.push_back(random_graph(order(rng), density(rng), rng));
  return graphs;
}

}  // namespace orient::fixtures
