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

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hamwb/digraph.hpp"

namespace hamwb {

enum class SequenceKind { path, cycle };

/// Distinct vertices read as a directed path, or as a directed cycle closed by
/// the arc (back, front). Validity is relative to a host digraph; see
/// is_valid().
struct VertexSequence {
  SequenceKind kind = SequenceKind::path;
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex operator[](std::size_t i) const { return vertices[i]; }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }

  bool operator==(const VertexSequence&) const = default;
};

std::string_view kind_name(SequenceKind kind);

/// Distinct in-range vertices, consecutive arcs present, and for a cycle the
/// closing arc present and length >= 2. An empty path is invalid.
bool is_valid(const Digraph& d, const VertexSequence& seq);

/// Checked constructors; throw PreconditionError when is_valid() fails.
VertexSequence make_path(const Digraph& d, std::vector<Vertex> vertices);
VertexSequence make_cycle(const Digraph& d, std::vector<Vertex> vertices);

/// C[x_from, x_to]: the vertices of `cycle` from position `from` forward to
/// position `to` (indices mod k), as a path. from == to gives one vertex.
VertexSequence cycle_segment(const VertexSequence& cycle, std::size_t from,
                             std::size_t to);

}  // namespace hamwb
