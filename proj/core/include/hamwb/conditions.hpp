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

#include <optional>
#include <string_view>
#include <vector>

#include "hamwb/digraph.hpp"

namespace hamwb {

/// Degree conditions for hamiltonicity, each evaluated as a predicate with a
/// violating witness.
enum class Condition {
  ghouila_houri,         // d(x) >= n for every x
  woodall,               // d+(x) + d-(y) >= n whenever (x,y) is not an arc
  meyniel,               // d(x) + d(y) >= 2n-1 for nonadjacent x, y
  manoussakis,           // the two 3n-2 triple inequalities
  conjecture1,           // 4n-3 over two distinct nonadjacent pairs
  conjecture1_disjoint,  // same, pairs required to be vertex-disjoint
  claim2,                // 2d(x) + d(y) + d(z) >= 4n-3
  conjecture2,           // the two triple inequalities with bound 3n+1
};

/// How the two nonadjacent pairs of the quadruple condition may relate.
enum class PairSharing {
  /// Pairs distinct as unordered pairs; one shared vertex counts twice.
  shared_vertex_allowed,
  vertex_disjoint,
};

struct Violation {
  /// Lexicographically least violating tuple: (x) for ghouila-houri,
  /// (x,y) for woodall and meyniel, (x,y,z) for the triple conditions and
  /// claim2, (x,y,w,z) for the quadruple conditions.
  std::vector<Vertex> vertices;
  int sum = 0;
  /// Which inequality of a two-clause triple condition failed: 1 for the
  /// d+(x) + d-(z) form (applies when (x,z) is not an arc), 2 for the
  /// d+(z) + d-(x) form (when (z,x) is not an arc). 0 elsewhere.
  int clause = 0;
};

struct ConditionReport {
  Condition condition = Condition::ghouila_houri;
  int bound = 0;
  std::optional<Violation> violation;

  bool holds() const noexcept { return !violation.has_value(); }
};

std::string_view condition_name(Condition c);
std::optional<Condition> parse_condition(std::string_view name);
const std::vector<Condition>& all_conditions();

ConditionReport check_ghouila_houri(const Digraph& d);
ConditionReport check_woodall(const Digraph& d);
ConditionReport check_meyniel(const Digraph& d);
ConditionReport check_manoussakis_t4(const Digraph& d);
ConditionReport check_conjecture1_hypothesis(
    const Digraph& d,
    PairSharing sharing = PairSharing::shared_vertex_allowed);
/// Throws PreconditionError unless check_conjecture1_hypothesis holds in the
/// shared-vertex reading. A failure after that means the hypothesis checker
/// is wrong.
ConditionReport check_claim2(const Digraph& d);
ConditionReport check_conjecture2_hypothesis(const Digraph& d);

ConditionReport check_condition(const Digraph& d, Condition c);

/// Minimum of d(x)+d(y)+d(w)+d(z) over two distinct nonadjacent pairs;
/// empty when fewer than two qualifying pairs exist.
std::optional<int> min_quadruple_sum(
    const Digraph& d,
    PairSharing sharing = PairSharing::shared_vertex_allowed);

}  // namespace hamwb
