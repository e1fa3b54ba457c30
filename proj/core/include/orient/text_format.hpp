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

#include <optional>
#include <string>
#include <string_view>

#include "orient/dominance.hpp"
#include "orient/graph.hpp"

namespace orient {

// Upper-triangle text form:
//
//   5          <- order n
//   >...       <- row i has n - i characters; character j - i describes
//   >>>           column j > i: '>' arc i->j, '<' arc j->i, '.' tie
//   ..
//   .
//
// Blank lines and lines starting with '#' are skipped. Throws ParseError
// (BadHeader, BadRowLength, BadCharacter).
OrientedGraph parse_graph(std::string_view text);

// Canonical form: header and rows, each ending in '\n', no comments.
std::string serialize_graph(const OrientedGraph& g);

// Graphviz digraph. Arcs become directed edges, ties a single dashed
// undirected edge. With a report, vertices carry their score and are
// coloured by weak-king / weak-serf membership.
std::string export_dot(const OrientedGraph& g,
                       const std::optional<DominanceReport>& annotations = std::nullopt);

}  // namespace orient
