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

#include "hamwb/conditions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

#include "hamwb/error.hpp"

namespace hamwb {

namespace {

struct DegreeTable {
  std::vector<int> out;
  std::vector<int> in;
  std::vector<int> total;

  explicit DegreeTable(const Digraph& d) {
    const auto n = static_cast<std::size_t>(d.order());
    out.resize(n);
    in.resize(n);
    total.resize(n);
    for (Vertex v = 0; v < d.order(); ++v) {
      const auto i = static_cast<std::size_t>(v);
      out[i] = d.out_neighbors(v).size();
      in[i] = d.in_neighbors(v).size();
      total[i] = out[i] + in[i];
    }
  }

  int d(Vertex v) const { return total[static_cast<std::size_t>(v)]; }
  int dout(Vertex v) const { return out[static_cast<std::size_t>(v)]; }
  int din(Vertex v) const { return in[static_cast<std::size_t>(v)]; }
};

ConditionReport report_for(Condition c, int bound) {
  ConditionReport r;
  r.condition = c;
  r.bound = bound;
  return r;
}

ConditionReport check_triple_condition(const Digraph& d, Condition c,
                                       int bound) {
  ConditionReport r = report_for(c, bound);
  const DegreeTable deg(d);
  const int n = d.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (y == x || d.adjacent(x, y)) continue;
      for (Vertex z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const int base = deg.d(x) + deg.d(y);
        if (!d.has_arc(x, z)) {
          const int sum = base + deg.dout(x) + deg.din(z);
          if (sum < bound) {
            r.violation = Violation{{x, y, z}, sum, 1};
            return r;
          }
        }
        if (!d.has_arc(z, x)) {
          const int sum = base + deg.dout(z) + deg.din(x);
          if (sum < bound) {
            r.violation = Violation{{x, y, z}, sum, 2};
            return r;
          }
        }
      }
    }
  }
  return r;
}

bool share_vertex(const std::pair<Vertex, Vertex>& a,
                  const std::pair<Vertex, Vertex>& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::ghouila_houri: return "ghouila-houri";
    case Condition::woodall: return "woodall";
    case Condition::meyniel: return "meyniel";
    case Condition::manoussakis: return "manoussakis";
    case Condition::conjecture1: return "conjecture1";
    case Condition::conjecture1_disjoint: return "conjecture1-disjoint";
    case Condition::claim2: return "claim2";
    case Condition::conjecture2: return "conjecture2";
  }
  return "unknown";
}

const std::vector<Condition>& all_conditions() {
  static const std::vector<Condition> all = {
      Condition::ghouila_houri, Condition::woodall,
      Condition::meyniel,       Condition::manoussakis,
      Condition::conjecture1,   Condition::conjecture1_disjoint,
      Condition::claim2,        Condition::conjecture2,
  };
  return all;
}

std::optional<Condition> parse_condition(std::string_view name) {
  for (Condition c : all_conditions()) {
    if (condition_name(c) == name) return c;
  }
  return std::nullopt;
}

ConditionReport check_ghouila_houri(const Digraph& d) {
  const int n = d.order();
  ConditionReport r = report_for(Condition::ghouila_houri, n);
  for (Vertex x = 0; x < n; ++x) {
    const int dx = d.out_neighbors(x).size() + d.in_neighbors(x).size();
    if (dx < n) {
      r.violation = Violation{{x}, dx, 0};
      break;
    }
  }
  return r;
}

ConditionReport check_woodall(const Digraph& d) {
  const int n = d.order();
  ConditionReport r = report_for(Condition::woodall, n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || d.has_arc(x, y)) continue;
      const int sum = d.out_neighbors(x).size() + d.in_neighbors(y).size();
      if (sum < n) {
        r.violation = Violation{{x, y}, sum, 0};
        return r;
      }
    }
  }
  return r;
}

ConditionReport check_meyniel(const Digraph& d) {
  const int n = d.order();
  ConditionReport r = report_for(Condition::meyniel, 2 * n - 1);
  const DegreeTable deg(d);
  for (const auto& [x, y] : nonadjacent_pairs(d)) {
    const int sum = deg.d(x) + deg.d(y);
    if (sum < r.bound) {
      r.violation = Violation{{x, y}, sum, 0};
      break;
    }
  }
  return r;
}

ConditionReport check_manoussakis_t4(const Digraph& d) {
  return check_triple_condition(d, Condition::manoussakis, 3 * d.order() - 2);
}

ConditionReport check_conjecture2_hypothesis(const Digraph& d) {
  return check_triple_condition(d, Condition::conjecture2, 3 * d.order() + 1);
}

ConditionReport check_conjecture1_hypothesis(const Digraph& d,
                                             PairSharing sharing) {
  const bool shared = sharing == PairSharing::shared_vertex_allowed;
  ConditionReport r =
      report_for(shared ? Condition::conjecture1 : Condition::conjecture1_disjoint,
                 4 * d.order() - 3);
  const DegreeTable deg(d);
  const auto pairs = nonadjacent_pairs(d);
  const std::size_t m = pairs.size();
  if (m < 2) return r;

  std::vector<int> sums(m);
  for (std::size_t i = 0; i < m; ++i) {
    sums[i] = deg.d(pairs[i].first) + deg.d(pairs[i].second);
  }

  auto violate = [&](std::size_t i, std::size_t j) {
    r.violation = Violation{{pairs[i].first, pairs[i].second, pairs[j].first,
                             pairs[j].second},
                            sums[i] + sums[j],
                            0};
  };

  if (shared) {
    // Any two distinct pairs qualify, so a row i can only contain a
    // violation if s_i plus the smallest other sum is below the bound.
    std::array<std::size_t, 2> smallest{0, 1};
    if (sums[1] < sums[0]) std::swap(smallest[0], smallest[1]);
    for (std::size_t i = 2; i < m; ++i) {
      if (sums[i] < sums[smallest[0]]) {
        smallest = {i, smallest[0]};
      } else if (sums[i] < sums[smallest[1]]) {
        smallest[1] = i;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t partner = smallest[0] == i ? smallest[1] : smallest[0];
      if (sums[i] + sums[partner] >= r.bound) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i && sums[i] + sums[j] < r.bound) {
          violate(i, j);
          return r;
        }
      }
    }
    return r;
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || share_vertex(pairs[i], pairs[j])) continue;
      if (sums[i] + sums[j] < r.bound) {
        violate(i, j);
        return r;
      }
    }
  }
  return r;
}

ConditionReport check_claim2(const Digraph& d) {
  if (!check_conjecture1_hypothesis(d).holds()) {
    throw PreconditionError(
        "claim2 requires the quadruple degree condition to hold");
  }
  const int n = d.order();
  ConditionReport r = report_for(Condition::claim2, 4 * n - 3);
  const DegreeTable deg(d);
  for (Vertex x = 0; x < n; ++x) {
    const VertexSet far =
        d.vertices() - d.out_neighbors(x) - d.in_neighbors(x) -
        VertexSet::single(x);
    for (Vertex y : far) {
      for (Vertex z : far) {
        if (z <= y) continue;
        const int sum = 2 * deg.d(x) + deg.d(y) + deg.d(z);
        if (sum < r.bound) {
          r.violation = Violation{{x, y, z}, sum, 0};
          return r;
        }
      }
    }
  }
  return r;
}

ConditionReport check_condition(const Digraph& d, Condition c) {
  switch (c) {
    case Condition::ghouila_houri: return check_ghouila_houri(d);
    case Condition::woodall: return check_woodall(d);
    case Condition::meyniel: return check_meyniel(d);
    case Condition::manoussakis: return check_manoussakis_t4(d);
    case Condition::conjecture1:
      return check_conjecture1_hypothesis(d, PairSharing::shared_vertex_allowed);
    case Condition::conjecture1_disjoint:
      return check_conjecture1_hypothesis(d, PairSharing::vertex_disjoint);
    case Condition::claim2: return check_claim2(d);
    case Condition::conjecture2: return check_conjecture2_hypothesis(d);
  }
  return check_ghouila_houri(d);
}

std::optional<int> min_quadruple_sum(const Digraph& d, PairSharing sharing) {
  const auto pairs = nonadjacent_pairs(d);
  const DegreeTable deg(d);
  std::optional<int> best;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (sharing == PairSharing::vertex_disjoint &&
          share_vertex(pairs[i], pairs[j])) {
        continue;
      }
      const int sum = deg.d(pairs[i].first) + deg.d(pairs[i].second) +
                      deg.d(pairs[j].first) + deg.d(pairs[j].second);
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

}  // namespace hamwb
