// Copyright 2026 The hamwb Authors
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

#include "hamwb/io.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "hamwb/error.hpp"

namespace hamwb {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      const std::size_t last = line.find_last_not_of(" \t");
      out.push_back({number, line.substr(first, last - first + 1)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
  return value;
}

Digraph parse_arc_list(const std::vector<Line>& lines) {
  std::optional<int> order;
  std::vector<Arc> arcs;
  for (const Line& line : lines) {
    const auto tokens = split_tokens(line.text);
    if (tokens[0] == "n") {
      if (order) throw ParseError(line.number, "duplicate 'n' header");
      if (tokens.size() != 2) {
        throw ParseError(line.number, "header must be 'n <count>'");
      }
      const int n = parse_int(tokens[1], line.number);
      if (n < 0 || n > Digraph::kMaxOrder) {
        throw ParseError(line.number,
                         "order " + std::to_string(n) + " outside [0, " +
                             std::to_string(Digraph::kMaxOrder) + "]");
      }
      order = n;
    } else if (tokens[0] == "a") {
      if (!order) throw ParseError(line.number, "arc before 'n' header");
      if (tokens.size() != 3) {
        throw ParseError(line.number, "arc must be 'a <u> <v>'");
      }
      const int u = parse_int(tokens[1], line.number);
      const int v = parse_int(tokens[2], line.number);
      if (u < 0 || u >= *order || v < 0 || v >= *order) {
        throw ParseError(line.number, "vertex id out of range");
      }
      if (u == v) {
        throw ParseError(line.number, "loop at vertex " + std::to_string(u));
      }
      arcs.push_back({u, v});
    } else {
      throw ParseError(line.number,
                       "unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!order) throw ParseError(0, "missing 'n' header");
  return Digraph(*order, arcs);
}

Digraph parse_matrix(const std::vector<Line>& lines) {
  const int n = static_cast<int>(lines.size());
  if (n > Digraph::kMaxOrder) {
    throw ParseError(lines[Digraph::kMaxOrder].number, "too many rows");
  }
  std::vector<std::uint64_t> rows;
  rows.reserve(lines.size());
  for (int u = 0; u < n; ++u) {
    const Line& line = lines[static_cast<std::size_t>(u)];
    if (static_cast<int>(line.text.size()) != n) {
      throw ParseError(line.number, "row has " +
                                        std::to_string(line.text.size()) +
                                        " columns, expected " +
                                        std::to_string(n));
    }
    std::uint64_t row = 0;
    for (int v = 0; v < n; ++v) {
      const char c = line.text[static_cast<std::size_t>(v)];
      if (c != '0' && c != '1') {
        throw ParseError(line.number, "matrix entries must be 0 or 1");
      }
      if (c == '1') {
        if (u == v) {
          throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        }
        row |= std::uint64_t{1} << v;
      }
    }
    rows.push_back(row);
  }
  return Digraph::from_out_rows(rows);
}

}  // namespace

Digraph parse_digraph(std::string_view text, TextFormat format) {
  const std::vector<Line> lines = content_lines(text);
  return format == TextFormat::arc_list ? parse_arc_list(lines)
                                        : parse_matrix(lines);
}

Digraph parse_digraph(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (!lines.empty() && lines.front().text.starts_with("n")) {
    return parse_arc_list(lines);
  }
  return parse_matrix(lines);
}

std::string serialize_digraph(const Digraph& d, TextFormat format) {
  std::string out;
  const int n = d.order();
  if (format == TextFormat::arc_list) {
    out += "n " + std::to_string(n) + "\n";
    for (const Arc& a : d.arcs()) {
      out += "a " + std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    }
    return out;
  }
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out += d.has_arc(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace hamwb
