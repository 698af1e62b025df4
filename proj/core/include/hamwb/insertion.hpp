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
#include <optional>
#include <stdexcept>
#include <vector>

#include "hamwb/digraph.hpp"
#include "hamwb/error.hpp"
#include "hamwb/sequence.hpp"

namespace hamwb {

/// Least m such that P[m] -> u and u -> P[m+1] are both arcs, i.e. u can be
/// spliced into the arc P[m] P[m+1]. Throws PreconditionError when u lies on
/// P or P is not a valid path.
std::optional<std::size_t> can_insert(const Digraph& d,
                                      const VertexSequence& path, Vertex u);

/// The path with u spliced in after position m.
VertexSequence insert_at(const VertexSequence& path, std::size_t m, Vertex u);

/// A vertex that cannot be inserted into P has at most |P|+1 arcs to and from
/// P. `holds` is false only if that bound is broken, which cannot happen for
/// a correct can_insert.
struct Lemma1Verdict {
  bool insertable = false;
  int degree_on_path = 0;
  int bound = 0;
  bool holds = true;
};

Lemma1Verdict check_lemma1_bound(const Digraph& d, const VertexSequence& path,
                                 Vertex v);

/// A path x_p y_1 ... y_t x_{p+span} leaving the cycle C, running through one
/// weak component of D - C, and returning to C, with the span minimal.
struct CPathWitness {
  VertexSequence cycle;
  std::size_t entry = 0;
  std::size_t span = 1;
  std::vector<Vertex> interior;
  VertexSet component;
  /// Vertices strictly inside the skipped segment that cannot be inserted
  /// into C[x_{p+span}, x_p], in cycle order.
  std::vector<Vertex> blocked;

  std::size_t exit() const { return (entry + span) % cycle.size(); }
  Vertex entry_vertex() const { return cycle[entry]; }
  Vertex exit_vertex() const { return cycle[exit()]; }
  /// x_{p+1} .. x_{p+span-1}
  std::vector<Vertex> skipped() const;
  /// C[x_{p+span}, x_p] as a path.
  VertexSequence remaining_segment() const;
};

/// Finds the C-path with the smallest span over every entry/exit pair for
/// `component`; ties go to the smallest entry position, then the shortest,
/// then the lexicographically least interior. Empty when no such path
/// exists. Throws PreconditionError if C is not a valid cycle or the
/// component meets C.
std::optional<CPathWitness> find_c_path(const Digraph& d,
                                        const VertexSequence& cycle,
                                        VertexSet component);

struct PairSum {
  Vertex y = 0;
  Vertex s = 0;
  int sum = 0;
};

struct Lemma2Verdict {
  bool holds = true;
  int bound = 0;
  std::vector<PairSum> sums;
};

/// d(y_i) + d(s) <= 2n-2 for every interior y_i and blocked s. Only valid when
/// the witness cycle is a longest cycle; the caller certifies that through
/// `cycle_is_longest` (false throws PreconditionError).
Lemma2Verdict check_lemma2_bound(const Digraph& d, const CPathWitness& witness,
                                 bool cycle_is_longest);

/// Precondition failures of merge_insert_all, distinguished by reason.
class MergePreconditionError : public PreconditionError {
 public:
  enum class Reason { invalid_path, overlap, outside_source, not_insertable };

  MergePreconditionError(Reason reason, const std::string& message)
      : PreconditionError(message), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Given disjoint paths Q and P and K within V(P) whose members are each
/// insertable into Q, returns a path Q' with Q's endpoints and
/// V(Q) <= V(Q') <= V(Q) + V(P) that contains K. Exact memoised backtracking;
/// an empty result means no such path exists.
std::optional<VertexSequence> merge_insert_all(const Digraph& d,
                                               const VertexSequence& q,
                                               const VertexSequence& p,
                                               VertexSet k);

struct ExtensionRound {
  CPathWitness c_path;
  /// Skipped cycle vertices re-inserted into the remaining segment.
  std::vector<Vertex> rerouted;
  /// Off-cycle vertices added to the cycle.
  std::vector<Vertex> absorbed;
  std::size_t length = 0;
};

struct ExtensionTrace {
  VertexSequence cycle;
  std::vector<ExtensionRound> rounds;
};

/// Repeatedly reroutes the cycle through a C-path whose skipped vertices can
/// all be re-inserted, until no component admits one. The length never
/// decreases and never exceeds the longest cycle of D.
ExtensionTrace extend_cycle(const Digraph& d, const VertexSequence& initial);

}  // namespace hamwb
