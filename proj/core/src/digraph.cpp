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

#include "hamwb/digraph.hpp"

#include <stdexcept>
#include <string>

#include "hamwb/error.hpp"

namespace hamwb {

namespace {

void check_order(int n) {
  if (n < 0 || n > Digraph::kMaxOrder) {
    throw InvalidDigraph("order " + std::to_string(n) + " outside [0, " +
                         std::to_string(Digraph::kMaxOrder) + "]");
  }
}

void check_vertex(const Digraph& d, Vertex v) {
  if (v < 0 || v >= d.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside digraph of order " +
                            std::to_string(d.order()));
  }
}

}  // namespace

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n) {
  check_order(n);
  out_.assign(static_cast<std::size_t>(n), VertexSet{});
  in_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw InvalidDigraph("arc (" + std::to_string(a.from) + "," +
                           std::to_string(a.to) + ") has a vertex outside [0, " +
                           std::to_string(n) + ")");
    }
    if (a.from == a.to) {
      throw InvalidDigraph("loop at vertex " + std::to_string(a.from));
    }
    if (!out_[static_cast<std::size_t>(a.from)].contains(a.to)) {
      out_[static_cast<std::size_t>(a.from)].insert(a.to);
      in_[static_cast<std::size_t>(a.to)].insert(a.from);
      ++arc_count_;
    }
  }
}

Digraph Digraph::from_out_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Digraph d;
  d.n_ = n;
  d.out_.assign(rows.size(), VertexSet{});
  d.in_.assign(rows.size(), VertexSet{});
  const VertexSet all = VertexSet::first(n);
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet row(rows[static_cast<std::size_t>(u)]);
    if (!row.subset_of(all)) {
      throw InvalidDigraph("row " + std::to_string(u) +
                           " names a vertex outside [0, " + std::to_string(n) +
                           ")");
    }
    if (row.contains(u)) {
      throw InvalidDigraph("loop at vertex " + std::to_string(u));
    }
    d.out_[static_cast<std::size_t>(u)] = row;
    for (Vertex v : row) d.in_[static_cast<std::size_t>(v)].insert(u);
    d.arc_count_ += static_cast<std::size_t>(row.size());
  }
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_[static_cast<std::size_t>(u)]) out.push_back({u, v});
  }
  return out;
}

Digraph Digraph::with_arc(Arc arc) const {
  if (arc.from < 0 || arc.from >= n_ || arc.to < 0 || arc.to >= n_) {
    throw InvalidDigraph("arc endpoint out of range");
  }
  if (arc.from == arc.to) {
    throw InvalidDigraph("loop at vertex " + std::to_string(arc.from));
  }
  Digraph d = *this;
  if (!d.out_[static_cast<std::size_t>(arc.from)].contains(arc.to)) {
    d.out_[static_cast<std::size_t>(arc.from)].insert(arc.to);
    d.in_[static_cast<std::size_t>(arc.to)].insert(arc.from);
    ++d.arc_count_;
  }
  return d;
}

Digraph Digraph::without_vertices(VertexSet removed) const {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
  for (Vertex u = 0; u < n_; ++u) {
    if (removed.contains(u)) continue;
    rows[static_cast<std::size_t>(u)] =
        (out_[static_cast<std::size_t>(u)] - removed).bits();
  }
  return from_out_rows(rows);
}

Digraph make_digraph(int n, std::span<const Arc> arcs) {
  return Digraph(n, arcs);
}

Degree degree(const Digraph& d, Vertex v) {
  return degree(d, v, d.vertices());
}

Degree degree(const Digraph& d, Vertex v, VertexSet restrict_to) {
  check_vertex(d, v);
  Degree deg;
  deg.out = (d.out_neighbors(v) & restrict_to).size();
  deg.in = (d.in_neighbors(v) & restrict_to).size();
  deg.total = deg.out + deg.in;
  return deg;
}

std::vector<std::pair<Vertex, Vertex>> nonadjacent_pairs(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = d.order();
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet neighbours = d.out_neighbors(u) | d.in_neighbors(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (!neighbours.contains(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> weak_components(const Digraph& d, VertexSet exclude) {
  std::vector<VertexSet> components;
  VertexSet unvisited = d.vertices() - exclude;
  while (!unvisited.empty()) {
    VertexSet component = VertexSet::single(unvisited.front());
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) {
        next |= d.out_neighbors(v) | d.in_neighbors(v);
      }
      next = (next - exclude) - component;
      component |= next;
      frontier = next;
    }
    components.push_back(component);
    unvisited -= component;
  }
  return components;
}

}  // namespace hamwb
