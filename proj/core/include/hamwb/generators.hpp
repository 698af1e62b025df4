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

namespace hamwb {

/// The associated digraph of K_{(n-1)/2,(n+1)/2}: X = {0..(n-3)/2}, Y the
/// rest, both arcs between every X-Y pair, nothing inside a side.
/// Requires odd n >= 9; `allow_small` also admits 5 and 7.
/// Throws std::invalid_argument otherwise.
Digraph tightness_example(int n, bool allow_small = false);

/// Every ordered pair of distinct vertices is an arc.
Digraph complete_digraph(int n);

/// One 64-bit word from the SplitMix64 sequence seeded with `state`; used to
/// derive independent per-instance seeds.
std::uint64_t splitmix64(std::uint64_t state);

/// Each ordered pair (u,v), u != v, visited in lexicographic order, is an arc
/// with probability p. The stream is std::mt19937_64 seeded with `seed`; a
/// pair is kept when the top 53 bits of the next draw, read as a fraction in
/// [0,1), are below p. The result depends only on (n, p, seed).
/// Throws std::invalid_argument unless 0 <= p <= 1.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Number of labelled digraphs on n vertices, 2^(n(n-1)).
std::uint64_t labeled_count(int n);

/// Bit j of `index` selects the j-th ordered pair (u,v), u != v, in
/// lexicographic order. Defined for n(n-1) <= 63.
Digraph labeled_digraph(int n, std::uint64_t index);

/// Largest order accepted for exhaustive enumeration.
inline constexpr int kMaxExhaustiveOrder = 5;

/// Pull-based stream over labelled digraphs with indices in [first, last).
class LabeledEnumerator {
 public:
  /// Throws std::invalid_argument for n > kMaxExhaustiveOrder or an index
  /// range outside [0, labeled_count(n)].
  LabeledEnumerator(int n, std::uint64_t first, std::uint64_t last);
  explicit LabeledEnumerator(int n);

  std::optional<Digraph> next();
  std::uint64_t position() const noexcept { return next_; }

 private:
  int n_;
  std::uint64_t next_;
  std::uint64_t last_;
};

enum class GeneratorKind { tightness, random, exhaustive };

std::string_view generator_name(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator(std::string_view name);

/// Instance source for campaigns. Several orders (and, for random,
/// probabilities) may be given; see generate() for how an index maps to an
/// instance.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random;
  std::vector<int> orders;
  std::vector<double> probabilities;
  std::uint64_t seed = 0;
  bool allow_small_tightness = false;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Validates a spec; throws std::invalid_argument with the first problem.
void validate(const GeneratorSpec& spec);

/// Size of the index space: labelled digraphs summed over the orders for
/// exhaustive, one per order for tightness, unbounded (empty) for random.
std::optional<std::uint64_t> instance_space(const GeneratorSpec& spec);

/// Instance `index`:
///  - exhaustive: indices run through every labelled digraph of orders[0],
///    then orders[1], and so on;
///  - tightness: tightness_example(orders[index]);
///  - random: order orders[index % |orders|], probability
///    probabilities[(index / |orders|) % |probabilities|], seed
///    splitmix64(seed + index).
Digraph generate(const GeneratorSpec& spec, std::uint64_t index);

}  // namespace hamwb
