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

#include "orient/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "orient/error.hpp"

namespace orient {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.push_back({number, line});
    if (end == std::string_view::npos) break;
  }
  return lines;
}

}  // namespace

OrientedGraph parse_graph(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(ErrorCode::BadHeader, 1, 1, "missing vertex count");

  const Line& header = lines.front();
  int n = 0;
  const char* first = header.text.data();
  const char* last = first + header.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last || n < 1 || n > kMaxVertices) {
    throw ParseError(ErrorCode::BadHeader, header.number, 1,
                     "expected a vertex count in 1.." + std::to_string(kMaxVertices) + ", got '" +
                         std::string(header.text) + "'");
  }

  const std::size_t expected_rows = static_cast<std::size_t>(n - 1);
  if (lines.size() - 1 > expected_rows) {
    const Line& extra = lines[expected_rows + 1];
    throw ParseError(ErrorCode::BadRowLength, extra.number, 1,
                     "unexpected row beyond the " + std::to_string(expected_rows) + " required");
  }
  if (lines.size() - 1 < expected_rows) {
    const int after = lines.back().number + 1;
    throw ParseError(ErrorCode::BadRowLength, after, 1,
                     "missing row for vertex " + std::to_string(lines.size()));
  }

  std::vector<Mask> out(n, 0);
  for (Vertex i = 1; i < n; ++i) {
    const Line& row = lines[i];
    const std::size_t width = static_cast<std::size_t>(n - i);
    for (std::size_t col = 0; col < row.text.size() && col < width; ++col) {
      const Vertex j = i + 1 + static_cast<int>(col);
      switch (row.text[col]) {
        case '>': out[i - 1] |= vertex_bit(j); break;
        case '<': out[j - 1] |= vertex_bit(i); break;
        case '.': break;
        default:
          throw ParseError(ErrorCode::BadCharacter, row.number, static_cast<int>(col) + 1,
                           std::string("unexpected character '") + row.text[col] + "'");
      }
    }
    if (row.text.size() != width) {
      throw ParseError(ErrorCode::BadRowLength, row.number,
                       static_cast<int>(std::min(row.text.size(), width)) + 1,
                       "row for vertex " + std::to_string(i) + " needs " + std::to_string(width) +
                           " characters, has " + std::to_string(row.text.size()));
    }
  }
  return OrientedGraph::from_out_masks(n, out);
}

std::string serialize_graph(const OrientedGraph& g) {
  const int n = g.order();
  std::string text = std::to_string(n) + '\n';
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      text += g.has_arc(i, j) ? '>' : g.has_arc(j, i) ? '<' : '.';
    }
    text += '\n';
  }
  return text;
}

std::string export_dot(const OrientedGraph& g, const std::optional<DominanceReport>& annotations) {
  std::ostringstream os;
  os << "digraph oriented {\n";
  os << "  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    os << "  " << v;
    if (annotations) {
      const bool king = annotations->weak_kings.contains(v);
      const bool serf = annotations->weak_serfs.contains(v);
      os << " [label=\"" << v << "\\ns=" << score(g, v) << '"';
      if (king && serf) {
        os << ", style=filled, fillcolor=\"gold\"";
      } else if (king) {
        os << ", style=filled, fillcolor=\"lightblue\"";
      } else if (serf) {
        os << ", style=filled, fillcolor=\"lightpink\"";
      }
      if (annotations->kings.contains(v)) os << ", peripheries=2";
      os << ']';
    }
    os << ";\n";
  }
  for (Vertex i = 1; i <= g.order(); ++i) {
    for (Vertex j = i + 1; j <= g.order(); ++j) {
      if (g.has_arc(i, j)) {
        os << "  " << i << " -> " << j << ";\n";
      } else if (g.has_arc(j, i)) {
        os << "  " << j << " -> " << i << ";\n";
      } else {
        os << "  " << i << " -> " << j << " [dir=none, style=dashed];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace orient
