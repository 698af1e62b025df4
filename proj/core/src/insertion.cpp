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

#include "hamwb/insertion.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>

namespace hamwb {

std::optional<std::size_t> can_insert(const Digraph& d,
                                      const VertexSequence& path, Vertex u) {
  if (path.kind != SequenceKind::path || !is_valid(d, path)) {
    throw PreconditionError("can_insert needs a valid path");
  }
  if (path.vertex_set().contains(u)) {
    throw PreconditionError("vertex " + std::to_string(u) + " is on the path");
  }
  if (u < 0 || u >= d.order()) {
    throw PreconditionError("vertex " + std::to_string(u) + " out of range");
  }
  for (std::size_t m = 0; m + 1 < path.size(); ++m) {
    if (d.has_arc(path[m], u) && d.has_arc(u, path[m + 1])) return m;
  }
  return std::nullopt;
}

VertexSequence insert_at(const VertexSequence& path, std::size_t m, Vertex u) {
  VertexSequence out = path;
  out.vertices.insert(out.vertices.begin() + static_cast<std::ptrdiff_t>(m + 1),
                      u);
  return out;
}

Lemma1Verdict check_lemma1_bound(const Digraph& d, const VertexSequence& path,
                                 Vertex v) {
  Lemma1Verdict verdict;
  verdict.insertable = can_insert(d, path, v).has_value();
  verdict.degree_on_path = degree(d, v, path.vertex_set()).total;
  verdict.bound = static_cast<int>(path.size()) + 1;
  verdict.holds = verdict.insertable || verdict.degree_on_path <= verdict.bound;
  return verdict;
}

std::vector<Vertex> CPathWitness::skipped() const {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < span; ++i) {
    out.push_back(cycle[(entry + i) % cycle.size()]);
  }
  return out;
}

VertexSequence CPathWitness::remaining_segment() const {
  return cycle_segment(cycle, exit(), entry);
}

std::optional<CPathWitness> find_c_path(const Digraph& d,
                                        const VertexSequence& cycle,
                                        VertexSet component) {
  if (cycle.kind != SequenceKind::cycle || !is_valid(d, cycle)) {
    throw PreconditionError("find_c_path needs a valid cycle");
  }
  if (!(component & cycle.vertex_set()).empty()) {
    throw PreconditionError("component intersects the cycle");
  }
  if (!component.subset_of(d.vertices())) {
    throw PreconditionError("component has a vertex outside V");
  }
  const std::size_t k = cycle.size();
  const int n = d.order();
  constexpr int kUnreached = std::numeric_limits<int>::max();

  struct Best {
    std::size_t span;
    std::size_t entry;
    int hops;
    std::size_t exit;
  };
  std::optional<Best> best;
  std::vector<std::vector<int>> dist_by_exit(k);

  for (std::size_t j = 0; j < k; ++j) {
    // Hops inside the component from each vertex to one with an arc to x_j.
    std::vector<int>& dist = dist_by_exit[j];
    dist.assign(static_cast<std::size_t>(n), kUnreached);
    const VertexSet targets = d.in_neighbors(cycle[j]) & component;
    if (targets.empty()) continue;
    std::vector<Vertex> queue(targets.begin(), targets.end());
    for (Vertex t : targets) dist[static_cast<std::size_t>(t)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : d.in_neighbors(v) & component) {
        if (dist[static_cast<std::size_t>(u)] == kUnreached) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      int hops = kUnreached;
      for (Vertex y : d.out_neighbors(cycle[i]) & component) {
        hops = std::min(hops, dist[static_cast<std::size_t>(y)]);
      }
      if (hops == kUnreached) continue;
      const Best cand{(j + k - i) % k, i, hops, j};
      if (!best || std::tie(cand.span, cand.entry, cand.hops) <
                       std::tie(best->span, best->entry, best->hops)) {
        best = cand;
      }
    }
  }
  if (!best) return std::nullopt;

  CPathWitness w;
  w.cycle = cycle;
  w.entry = best->entry;
  w.span = best->span;
  w.component = component;

  const std::vector<int>& dist = dist_by_exit[best->exit];
  Vertex cur = -1;
  for (Vertex y : d.out_neighbors(cycle[best->entry]) & component) {
    if (dist[static_cast<std::size_t>(y)] == best->hops) {
      cur = y;
      break;
    }
  }
  w.interior.push_back(cur);
  while (dist[static_cast<std::size_t>(cur)] > 0) {
    const int want = dist[static_cast<std::size_t>(cur)] - 1;
    for (Vertex next : d.out_neighbors(cur) & component) {
      if (dist[static_cast<std::size_t>(next)] == want) {
        cur = next;
        break;
      }
    }
    w.interior.push_back(cur);
  }

  const VertexSequence rest = w.remaining_segment();
  for (Vertex r : w.skipped()) {
    if (!can_insert(d, rest, r)) w.blocked.push_back(r);
  }
  return w;
}

Lemma2Verdict check_lemma2_bound(const Digraph& d, const CPathWitness& witness,
                                 bool cycle_is_longest) {
  if (!cycle_is_longest) {
    throw PreconditionError("the pair bound needs a longest-cycle certificate");
  }
  Lemma2Verdict verdict;
  verdict.bound = 2 * d.order() - 2;
  for (Vertex y : witness.interior) {
    for (Vertex s : witness.blocked) {
      const int sum = degree(d, y).total + degree(d, s).total;
      verdict.sums.push_back({y, s, sum});
      if (sum > verdict.bound) verdict.holds = false;
    }
  }
  return verdict;
}

namespace {

// Depth-first search for a path from the current vertex to `last` that
// picks up every required vertex, optionally passing through spare ones.
class MergeSearch {
 public:
  MergeSearch(const Digraph& d, VertexSet required, VertexSet usable,
              Vertex last)
      : d_(d), required_(required), usable_(usable), last_(last) {}

  bool run(Vertex cur, VertexSet visited) {
    path_.push_back(cur);
    if (cur == last_) {
      if (required_.subset_of(visited)) return true;
      path_.pop_back();
      return false;
    }
    auto& failed = failed_[visited.bits()];
    if (VertexSet(failed).contains(cur)) {
      path_.pop_back();
      return false;
    }
    for (Vertex w : (d_.out_neighbors(cur) & usable_) - visited) {
      if (w == last_ && !(required_ - visited).subset_of(VertexSet::single(w))) {
        continue;
      }
      if (run(w, visited | VertexSet::single(w))) return true;
    }
    failed |= VertexSet::single(cur).bits();
    path_.pop_back();
    return false;
  }

  std::vector<Vertex> take_path() { return std::move(path_); }

 private:
  const Digraph& d_;
  VertexSet required_;
  VertexSet usable_;
  Vertex last_;
  std::vector<Vertex> path_;
  std::unordered_map<std::uint64_t, std::uint64_t> failed_;
};

}  // namespace

std::optional<VertexSequence> merge_insert_all(const Digraph& d,
                                               const VertexSequence& q,
                                               const VertexSequence& p,
                                               VertexSet k) {
  using Reason = MergePreconditionError::Reason;
  if (q.kind != SequenceKind::path || !is_valid(d, q) ||
      p.kind != SequenceKind::path || !is_valid(d, p)) {
    throw MergePreconditionError(Reason::invalid_path,
                                 "Q and P must be valid paths");
  }
  const VertexSet qs = q.vertex_set();
  const VertexSet ps = p.vertex_set();
  if (!(qs & ps).empty()) {
    throw MergePreconditionError(Reason::overlap, "Q and P share a vertex");
  }
  if (!k.subset_of(ps)) {
    throw MergePreconditionError(Reason::outside_source,
                                 "K is not contained in V(P)");
  }
  for (Vertex z : k) {
    if (!can_insert(d, q, z)) {
      throw MergePreconditionError(
          Reason::not_insertable,
          "vertex " + std::to_string(z) + " cannot be inserted into Q");
    }
  }
  if (k.empty()) return q;

  MergeSearch search(d, qs | k, qs | ps, q.vertices.back());
  if (!search.run(q.vertices.front(), VertexSet::single(q.vertices.front()))) {
    return std::nullopt;
  }
  return VertexSequence{SequenceKind::path, search.take_path()};
}

ExtensionTrace extend_cycle(const Digraph& d, const VertexSequence& initial) {
  if (initial.kind != SequenceKind::cycle || !is_valid(d, initial)) {
    throw PreconditionError("extend_cycle needs a valid cycle");
  }
  ExtensionTrace trace;
  trace.cycle = initial;
  const std::size_t cap =
      static_cast<std::size_t>(d.order()) * initial.size();

  bool progressed = true;
  while (progressed && trace.rounds.size() < cap) {
    progressed = false;
    const VertexSequence& cycle = trace.cycle;
    for (VertexSet component : weak_components(d, cycle.vertex_set())) {
      auto w = find_c_path(d, cycle, component);
      if (!w || !w->blocked.empty()) continue;

      const std::vector<Vertex> skipped = w->skipped();
      std::optional<VertexSequence> merged = w->remaining_segment();
      if (!skipped.empty()) {
        const VertexSequence source{SequenceKind::path, skipped};
        merged = merge_insert_all(d, *merged, source, source.vertex_set());
      }
      if (!merged) {
        throw std::logic_error("no merged path although every skipped vertex "
                               "is insertable");
      }

      VertexSequence next{SequenceKind::cycle, merged->vertices};
      next.vertices.insert(next.vertices.end(), w->interior.begin(),
                           w->interior.end());
      if (!is_valid(d, next)) {
        throw std::logic_error("rerouted cycle is invalid");
      }
      ExtensionRound round;
      round.rerouted = skipped;
      round.absorbed = w->interior;
      round.length = next.size();
      round.c_path = std::move(*w);
      trace.rounds.push_back(std::move(round));
      trace.cycle = std::move(next);
      progressed = true;
      break;
    }
  }
  return trace;
}

}  // namespace hamwb
