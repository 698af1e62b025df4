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

#include "hamwb/vertex_set.hpp"

#include <charconv>

#include "hamwb/error.hpp"

namespace hamwb {

std::string format_vertices(std::span<const Vertex> vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(vertices[i]);
  }
  return out;
}

std::string format_vertices(VertexSet vertices) {
  const std::vector<Vertex> v = vertices.to_vector();
  return format_vertices(std::span<const Vertex>(v));
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',' &&
           text[j] != '\t') {
      ++j;
    }
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc{} || ptr != text.data() + j || v < 0) {
      throw ParseError(0, "bad vertex id '" + text.substr(i, j - i) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace hamwb
