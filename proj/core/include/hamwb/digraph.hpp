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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hamwb/vertex_set.hpp"

namespace hamwb {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Degree of a vertex, optionally restricted to a vertex subset.
struct Degree {
  int out = 0;
  int in = 0;
  int total = 0;

  bool operator==(const Degree&) const = default;
};

/// A simple digraph on vertices 0..n-1: no loops, no parallel arcs, and
/// antiparallel pairs allowed. Immutable once built.
///
/// Adjacency is held as one out-row and one in-row bitmask per vertex, so
/// the order is capped at kMaxOrder.
class Digraph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Digraph() = default;

  /// Duplicate arcs collapse. Throws InvalidDigraph on a loop, an id outside
  /// [0, n), or n outside [0, kMaxOrder].
  Digraph(int n, std::span<const Arc> arcs);

  /// Builds from out-neighbourhood rows; rows.size() is the order.
  static Digraph from_out_rows(std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  VertexSet vertices() const noexcept { return VertexSet::first(n_); }

  bool has_arc(Vertex from, Vertex to) const noexcept {
    return out_[static_cast<std::size_t>(from)].contains(to);
  }
  /// True when at least one of the two arcs between u and v exists.
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return has_arc(u, v) || has_arc(v, u);
  }

  VertexSet out_neighbors(Vertex v) const noexcept {
    return out_[static_cast<std::size_t>(v)];
  }
  VertexSet in_neighbors(Vertex v) const noexcept {
    return in_[static_cast<std::size_t>(v)];
  }

  /// All arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;

  Digraph with_arc(Arc arc) const;
  /// Subdigraph induced by V minus `removed`, keeping the original ids.
  Digraph without_vertices(VertexSet removed) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

 private:
  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

Digraph make_digraph(int n, std::span<const Arc> arcs);
inline Digraph make_digraph(int n, std::initializer_list<Arc> arcs) {
  return Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// Degree of v over all of V. Throws std::out_of_range for a bad v.
Degree degree(const Digraph& d, Vertex v);
/// Degree of v counting only neighbours inside `restrict_to`.
Degree degree(const Digraph& d, Vertex v, VertexSet restrict_to);

/// Unordered pairs {u, v}, u < v, with neither arc present, in lexicographic
/// order.
std::vector<std::pair<Vertex, Vertex>> nonadjacent_pairs(const Digraph& d);

/// Weakly connected components of D - exclude, ordered by smallest member.
std::vector<VertexSet> weak_components(const Digraph& d, VertexSet exclude);

}  // namespace hamwb
