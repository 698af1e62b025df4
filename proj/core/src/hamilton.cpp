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

#include "hamwb/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>

#include "hamwb/error.hpp"

namespace hamwb {

namespace {

using Mask = std::uint32_t;

void guard_exact(const Digraph& d) {
  if (d.order() > kMaxExactOrder) {
    throw SizeLimitError("exact search supports at most " +
                         std::to_string(kMaxExactOrder) + " vertices, got " +
                         std::to_string(d.order()));
  }
}

Mask out_mask(const Digraph& d, Vertex v) {
  return static_cast<Mask>(d.out_neighbors(v).bits());
}
Mask in_mask(const Digraph& d, Vertex v) {
  return static_cast<Mask>(d.in_neighbors(v).bits());
}

Vertex lowest(Mask m) { return std::countr_zero(m); }

Mask bit(Vertex v) { return Mask{1} << v; }

// ends[mask] holds every v such that some path starting at lowest(mask),
// using exactly the vertices of mask, ends at v. Each cycle of D is counted
// once, rooted at its smallest vertex.
struct RootedPathTable {
  std::vector<Mask> ends;
  std::uint64_t explored = 0;

  explicit RootedPathTable(const Digraph& d) {
    const int n = d.order();
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    ends.assign(std::size_t{1} << n, 0);
    std::vector<Mask> out(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      out[static_cast<std::size_t>(v)] = out_mask(d, v);
      ends[bit(v)] = bit(v);
    }
    for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
      const Mask here = ends[mask];
      if (here == 0) continue;
      const Vertex root = lowest(mask);
      // Only vertices above the root may join.
      const Mask allowed = full & ~mask & ~((bit(root) << 1) - 1);
      for (Mask rest = here; rest != 0; rest &= rest - 1) {
        const Vertex v = lowest(rest);
        ++explored;
        for (Mask next = out[static_cast<std::size_t>(v)] & allowed; next != 0;
             next &= next - 1) {
          const Vertex w = lowest(next);
          ends[mask | bit(w)] |= bit(w);
        }
      }
    }
  }

  bool closes(const Digraph& d, Mask mask) const {
    return std::popcount(mask) >= 2 &&
           (ends[mask] & in_mask(d, lowest(mask))) != 0;
  }

  std::vector<Vertex> cycle_on(const Digraph& d, Mask mask) const {
    const Vertex root = lowest(mask);
    Vertex cur = lowest(ends[mask] & in_mask(d, root));
    std::vector<Vertex> reversed{cur};
    Mask left = mask;
    while (cur != root) {
      left &= ~bit(cur);
      cur = lowest(ends[left] & in_mask(d, cur));
      reversed.push_back(cur);
    }
    return {reversed.rbegin(), reversed.rend()};
  }
};

// Picks a closable mask minimising (key(mask), lowest(mask), mask).
template <class Accept, class Key>
std::optional<Mask> pick_cycle_mask(const Digraph& d,
                                    const RootedPathTable& table,
                                    Accept accept, Key key) {
  std::optional<Mask> best;
  auto rank = [&](Mask m) {
    return std::tuple(key(m), lowest(m), m);
  };
  for (Mask mask = 1; mask < table.ends.size(); ++mask) {
    if (!accept(mask) || !table.closes(d, mask)) continue;
    if (!best || rank(mask) < rank(*best)) best = mask;
  }
  return best;
}

}  // namespace

std::string_view method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::subset_dp: return "subset-dp";
    case SearchMethod::backtracking: return "backtracking";
    case SearchMethod::permutation_oracle: return "permutation-oracle";
  }
  return "unknown";
}

SearchOutcome hamilton_cycle(const Digraph& d) {
  SearchOutcome result;
  const int n = d.order();
  if (n < 2) return result;
  guard_exact(d);

  // completes[S >> 1], for S a subset of V - {0}: vertices v in S from which
  // a path through exactly S reaches an in-neighbour of 0.
  const Mask others = ((Mask{1} << n) - 1) & ~Mask{1};
  std::vector<Mask> completes(std::size_t{1} << (n - 1), 0);
  const Mask into_root = in_mask(d, 0);
  for (Mask s = 2; s <= others && s != 0; s += 2) {
    if ((s & ~others) != 0) continue;
    Mask good = 0;
    if (std::popcount(s) == 1) {
      good = s & into_root;
      ++result.explored;
    } else {
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const Vertex v = lowest(rest);
        ++result.explored;
        if ((out_mask(d, v) & completes[(s & ~bit(v)) >> 1]) != 0) {
          good |= bit(v);
        }
      }
    }
    completes[s >> 1] = good;
  }

  if ((out_mask(d, 0) & completes[others >> 1]) == 0) return result;

  std::vector<Vertex> cycle{0};
  Vertex cur = 0;
  Mask left = others;
  while (left != 0) {
    cur = lowest(out_mask(d, cur) & completes[left >> 1]);
    cycle.push_back(cur);
    left &= ~bit(cur);
  }
  result.optimum = n;
  result.found = VertexSequence{SequenceKind::cycle, std::move(cycle)};
  return result;
}

SearchOutcome hamilton_path(const Digraph& d) {
  SearchOutcome result;
  const int n = d.order();
  if (n < 1) throw PreconditionError("hamilton_path needs at least one vertex");
  guard_exact(d);

  // starts[S]: vertices v in S from which a path covers exactly S.
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> starts(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (std::popcount(s) == 1) {
      starts[s] = s;
      ++result.explored;
      continue;
    }
    Mask good = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const Vertex v = lowest(rest);
      ++result.explored;
      if ((out_mask(d, v) & starts[s & ~bit(v)]) != 0) good |= bit(v);
    }
    starts[s] = good;
  }
  if (starts[full] == 0) return result;

  Vertex cur = lowest(starts[full]);
  std::vector<Vertex> path{cur};
  Mask left = full & ~bit(cur);
  while (left != 0) {
    cur = lowest(out_mask(d, cur) & starts[left]);
    path.push_back(cur);
    left &= ~bit(cur);
  }
  result.optimum = n;
  result.found = VertexSequence{SequenceKind::path, std::move(path)};
  return result;
}

SearchOutcome longest_cycle(const Digraph& d) {
  SearchOutcome result;
  if (d.order() < 2) return result;
  guard_exact(d);
  const RootedPathTable table(d);
  result.explored = table.explored;
  const auto best = pick_cycle_mask(
      d, table, [](Mask) { return true; },
      [](Mask m) { return -std::popcount(m); });
  if (!best) return result;
  result.optimum = std::popcount(*best);
  result.found =
      VertexSequence{SequenceKind::cycle, table.cycle_on(d, *best)};
  return result;
}

PancyclicReport pancyclic(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw PreconditionError("pancyclicity needs at least 2 vertices");
  guard_exact(d);
  const RootedPathTable table(d);
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  for (Mask mask = 1; mask < table.ends.size(); ++mask) {
    if (table.closes(d, mask)) {
      present[static_cast<std::size_t>(std::popcount(mask))] = true;
    }
  }
  PancyclicReport report;
  for (int len = 2; len <= n; ++len) {
    if (!present[static_cast<std::size_t>(len)]) report.missing.push_back(len);
  }
  report.pancyclic = report.missing.empty();
  return report;
}

SearchOutcome cyclable(const Digraph& d, VertexSet required) {
  if (required.empty()) {
    throw PreconditionError("cyclable needs a non-empty vertex set");
  }
  if (!required.subset_of(d.vertices())) {
    throw PreconditionError("cyclable set contains a vertex outside V");
  }
  SearchOutcome result;
  guard_exact(d);
  if (d.order() < 2) return result;
  const RootedPathTable table(d);
  result.explored = table.explored;
  const auto need = static_cast<Mask>(required.bits());
  const auto best = pick_cycle_mask(
      d, table, [need](Mask m) { return (m & need) == need; },
      [](Mask m) { return std::popcount(m); });
  if (!best) return result;
  result.optimum = std::popcount(*best);
  result.found =
      VertexSequence{SequenceKind::cycle, table.cycle_on(d, *best)};
  return result;
}

std::optional<VertexSequence> shortest_cycle(const Digraph& d) {
  const int n = d.order();
  std::optional<VertexSequence> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    queue.assign({s});
    Vertex closing = -1;
    for (std::size_t head = 0; head < queue.size() && closing < 0; ++head) {
      const Vertex u = queue[head];
      if (d.has_arc(u, s) && u != s) {
        closing = u;
        break;
      }
      for (Vertex w : d.out_neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing < 0) continue;
    const std::size_t len =
        static_cast<std::size_t>(dist[static_cast<std::size_t>(closing)]) + 1;
    if (best && best->size() <= len) continue;
    std::vector<Vertex> cycle(len);
    for (Vertex v = closing; ; v = parent[static_cast<std::size_t>(v)]) {
      cycle[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])] = v;
      if (v == s) break;
    }
    best = VertexSequence{SequenceKind::cycle, std::move(cycle)};
  }
  return best;
}

namespace {

bool closes_cycle(const Digraph& d, const std::vector<Vertex>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!d.has_arc(order[i], order[i + 1])) return false;
  }
  return d.has_arc(order.back(), order.front());
}

bool is_path(const Digraph& d, const std::vector<Vertex>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!d.has_arc(order[i], order[i + 1])) return false;
  }
  return true;
}

// Tries every arrangement of `members` that keeps the smallest one first.
std::optional<std::vector<Vertex>> first_cycle_on(const Digraph& d,
                                                  std::vector<Vertex> members,
                                                  std::uint64_t& explored) {
  std::sort(members.begin(), members.end());
  do {
    ++explored;
    if (closes_cycle(d, members)) return members;
  } while (std::next_permutation(members.begin() + 1, members.end()));
  return std::nullopt;
}

}  // namespace

SearchOutcome permutation_oracle(const Digraph& d, OracleTarget target) {
  const int n = d.order();
  if (n > kMaxOracleOrder) {
    throw SizeLimitError("permutation oracle supports at most " +
                         std::to_string(kMaxOracleOrder) + " vertices");
  }
  SearchOutcome result;
  result.method = SearchMethod::permutation_oracle;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);

  switch (target) {
    case OracleTarget::cycle: {
      if (n < 2) return result;
      if (auto c = first_cycle_on(d, all, result.explored)) {
        result.optimum = n;
        result.found = VertexSequence{SequenceKind::cycle, std::move(*c)};
      }
      return result;
    }
    case OracleTarget::path: {
      if (n < 1) throw PreconditionError("hamilton path needs a vertex");
      do {
        ++result.explored;
        if (is_path(d, all)) {
          result.optimum = n;
          result.found = VertexSequence{SequenceKind::path, all};
          return result;
        }
      } while (std::next_permutation(all.begin(), all.end()));
      return result;
    }
    case OracleTarget::longest_cycle: {
      for (int len = n; len >= 2; --len) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
          if (std::popcount(mask) != len) continue;
          std::vector<Vertex> members;
          for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) members.push_back(v);
          }
          if (auto c = first_cycle_on(d, members, result.explored)) {
            result.optimum = len;
            result.found = VertexSequence{SequenceKind::cycle, std::move(*c)};
            return result;
          }
        }
      }
      return result;
    }
  }
  return result;
}

}  // namespace hamwb
