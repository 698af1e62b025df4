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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hamwb/digraph.hpp"
#include "hamwb/sequence.hpp"

namespace hamwb {

enum class SearchMethod { subset_dp, backtracking, permutation_oracle };

std::string_view method_name(SearchMethod m);

/// Result of an exact search. `optimum` is the length of `found` when a
/// structure exists and 0 otherwise; `explored` counts DP states or
/// enumerated permutations for this call only.
struct SearchOutcome {
  std::optional<VertexSequence> found;
  int optimum = 0;
  std::uint64_t explored = 0;
  SearchMethod method = SearchMethod::subset_dp;
};

/// Largest order the subset-DP searches accept. Larger inputs throw
/// SizeLimitError rather than fall back to a heuristic.
inline constexpr int kMaxExactOrder = 20;
/// Largest order accepted by permutation_oracle().
inline constexpr int kMaxOracleOrder = 9;

/// Hamilton cycle by subset DP. The witness starts at vertex 0 and is the
/// lexicographically least such cycle. Orders below 2 are reported as
/// non-hamiltonian without searching.
SearchOutcome hamilton_cycle(const Digraph& d);

/// Hamilton path by subset DP; the witness is the lexicographically least
/// Hamilton path. Throws PreconditionError for the empty digraph.
SearchOutcome hamilton_path(const Digraph& d);

/// Longest directed cycle (length >= 2). optimum is 0 for acyclic digraphs.
/// The witness starts at its smallest vertex; among optimal cycles the one
/// with the smallest start, then the smallest vertex-set bitmask, is chosen.
SearchOutcome longest_cycle(const Digraph& d);

struct PancyclicReport {
  bool pancyclic = false;
  /// Lengths in 2..n with no cycle of that length, ascending.
  std::vector<int> missing;
};

/// Throws PreconditionError for n < 2.
PancyclicReport pancyclic(const Digraph& d);

/// A cycle through every vertex of `required`; the shortest such cycle is
/// returned. Throws PreconditionError when `required` is empty or not a
/// subset of V.
SearchOutcome cyclable(const Digraph& d, VertexSet required);

/// A cycle of minimum length (BFS from each vertex; smallest start wins
/// ties). Empty when D is acyclic. Not subject to kMaxExactOrder.
std::optional<VertexSequence> shortest_cycle(const Digraph& d);

enum class OracleTarget { cycle, path, longest_cycle };

/// Brute-force permutation enumeration, independent of the DP engines; used
/// to cross-check them. Throws SizeLimitError above kMaxOracleOrder.
SearchOutcome permutation_oracle(const Digraph& d, OracleTarget target);

}  // namespace hamwb
