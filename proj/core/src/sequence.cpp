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

#include "hamwb/sequence.hpp"

#include "hamwb/error.hpp"

namespace hamwb {

std::string_view kind_name(SequenceKind kind) {
  return kind == SequenceKind::path ? "path" : "cycle";
}

bool is_valid(const Digraph& d, const VertexSequence& seq) {
  const auto& vs = seq.vertices;
  if (vs.empty()) return false;
  if (seq.kind == SequenceKind::cycle && vs.size() < 2) return false;
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!d.has_arc(vs[i], vs[i + 1])) return false;
  }
  if (seq.kind == SequenceKind::cycle && !d.has_arc(vs.back(), vs.front())) {
    return false;
  }
  return true;
}

VertexSequence make_path(const Digraph& d, std::vector<Vertex> vertices) {
  VertexSequence seq{SequenceKind::path, std::move(vertices)};
  if (!is_valid(d, seq)) {
    throw PreconditionError("not a path: " + format_vertices(seq.vertices));
  }
  return seq;
}

VertexSequence make_cycle(const Digraph& d, std::vector<Vertex> vertices) {
  VertexSequence seq{SequenceKind::cycle, std::move(vertices)};
  if (!is_valid(d, seq)) {
    throw PreconditionError("not a cycle: " + format_vertices(seq.vertices));
  }
  return seq;
}

VertexSequence cycle_segment(const VertexSequence& cycle, std::size_t from,
                             std::size_t to) {
  const std::size_t k = cycle.size();
  VertexSequence seg{SequenceKind::path, {}};
  if (k == 0) return seg;
  std::size_t i = from % k;
  const std::size_t last = to % k;
  seg.vertices.push_back(cycle[i]);
  while (i != last) {
    i = (i + 1) % k;
    seg.vertices.push_back(cycle[i]);
  }
  return seg;
}

}  // namespace hamwb
