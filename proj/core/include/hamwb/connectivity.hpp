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

#include "hamwb/digraph.hpp"

namespace hamwb {

struct ConnectivityReport {
  int k = 1;
  bool holds = true;
  /// First ordered pair (lexicographic) with fewer than k disjoint paths.
  std::optional<Arc> witness;
  /// Disjoint path count found for the witness pair.
  int witness_paths = 0;
};

/// Maximum number of internally vertex-disjoint directed paths from `from` to
/// `to`. The arc (from, to), when present, counts as one path. Computed as a
/// unit vertex-capacity maximum flow; stops early once `limit` paths are
/// found.
int max_disjoint_paths(const Digraph& d, Vertex from, Vertex to,
                       int limit = Digraph::kMaxOrder);

/// Strong k-connectivity: every ordered pair of distinct vertices is joined by
/// at least k internally disjoint paths. Vacuously true when n < 2.
/// Throws std::invalid_argument for k < 1.
ConnectivityReport strongly_k_connected(const Digraph& d, int k);

inline bool strongly_connected(const Digraph& d) {
  return strongly_k_connected(d, 1).holds;
}

}  // namespace hamwb
