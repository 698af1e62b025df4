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

#include "hamwb/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace hamwb {

Digraph tightness_example(int n, bool allow_small) {
  const int smallest = allow_small ? 5 : 9;
  if (n % 2 == 0 || n < smallest) {
    throw std::invalid_argument("tightness example needs odd n >= " +
                                std::to_string(smallest) + ", got " +
                                std::to_string(n));
  }
  const int x_size = (n - 1) / 2;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(2 * x_size * (n - x_size)));
  for (Vertex x = 0; x < x_size; ++x) {
    for (Vertex y = x_size; y < n; ++y) {
      arcs.push_back({x, y});
      arcs.push_back({y, x});
    }
  }
  return Digraph(n, arcs);
}

Digraph complete_digraph(int n) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t all = VertexSet::first(n).bits();
  for (Vertex u = 0; u < n; ++u) {
    rows[static_cast<std::size_t>(u)] = all & ~(std::uint64_t{1} << u);
  }
  return Digraph::from_out_rows(rows);
}

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("arc probability must lie in [0, 1]");
  }
  if (n < 0 || n > Digraph::kMaxOrder) {
    throw std::invalid_argument("order out of range");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const double draw = static_cast<double>(rng() >> 11) * kScale;
      if (draw < p) rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    }
  }
  return Digraph::from_out_rows(rows);
}

std::uint64_t labeled_count(int n) {
  const int bits = n * (n - 1);
  if (n < 0 || bits > 63) {
    throw std::invalid_argument("labelled count overflows for n = " +
                                std::to_string(n));
  }
  return std::uint64_t{1} << bits;
}

Digraph labeled_digraph(int n, std::uint64_t index) {
  if (n < 0 || n * (n - 1) > 63) {
    throw std::invalid_argument("labelled index undefined for n = " +
                                std::to_string(n));
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int j = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((index >> j) & 1U) rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      ++j;
    }
  }
  return Digraph::from_out_rows(rows);
}

LabeledEnumerator::LabeledEnumerator(int n, std::uint64_t first,
                                     std::uint64_t last)
    : n_(n), next_(first), last_(last) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " +
                                std::to_string(kMaxExhaustiveOrder));
  }
  if (first > last || last > labeled_count(n)) {
    throw std::invalid_argument("index range outside the labelled space");
  }
}

LabeledEnumerator::LabeledEnumerator(int n)
    : LabeledEnumerator(n, 0, n >= 1 && n <= kMaxExhaustiveOrder
                                  ? labeled_count(n)
                                  : 0) {}

std::optional<Digraph> LabeledEnumerator::next() {
  if (next_ >= last_) return std::nullopt;
  return labeled_digraph(n_, next_++);
}

std::string_view generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::tightness: return "tightness";
    case GeneratorKind::random: return "random";
    case GeneratorKind::exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator(std::string_view name) {
  for (GeneratorKind k : {GeneratorKind::tightness, GeneratorKind::random,
                          GeneratorKind::exhaustive}) {
    if (generator_name(k) == name) return k;
  }
  return std::nullopt;
}

void validate(const GeneratorSpec& spec) {
  if (spec.orders.empty()) {
    throw std::invalid_argument("generator needs at least one order");
  }
  for (int n : spec.orders) {
    if (n < 2) throw std::invalid_argument("generator orders must be >= 2");
    switch (spec.kind) {
      case GeneratorKind::exhaustive:
        if (n > kMaxExhaustiveOrder) {
          throw std::invalid_argument(
              "exhaustive enumeration supports n <= " +
              std::to_string(kMaxExhaustiveOrder) + "; sample larger orders");
        }
        break;
      case GeneratorKind::tightness:
        if (n % 2 == 0 || n < (spec.allow_small_tightness ? 5 : 9)) {
          throw std::invalid_argument("tightness orders must be odd and >= 9");
        }
        break;
      case GeneratorKind::random:
        if (n > Digraph::kMaxOrder) {
          throw std::invalid_argument("random order exceeds the digraph limit");
        }
        break;
    }
  }
  if (spec.kind == GeneratorKind::random) {
    if (spec.probabilities.empty()) {
      throw std::invalid_argument("random generator needs a probability");
    }
    for (double p : spec.probabilities) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("arc probability must lie in [0, 1]");
      }
    }
  }
}

std::optional<std::uint64_t> instance_space(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::exhaustive: {
      std::uint64_t total = 0;
      for (int n : spec.orders) total += labeled_count(n);
      return total;
    }
    case GeneratorKind::tightness:
      return spec.orders.size();
    case GeneratorKind::random:
      return std::nullopt;
  }
  return std::nullopt;
}

Digraph generate(const GeneratorSpec& spec, std::uint64_t index) {
  switch (spec.kind) {
    case GeneratorKind::exhaustive: {
      for (int n : spec.orders) {
        const std::uint64_t count = labeled_count(n);
        if (index < count) return labeled_digraph(n, index);
        index -= count;
      }
      throw std::out_of_range("exhaustive index past the end of the space");
    }
    case GeneratorKind::tightness:
      return tightness_example(spec.orders.at(static_cast<std::size_t>(index)),
                               spec.allow_small_tightness);
    case GeneratorKind::random: {
      const std::uint64_t orders = spec.orders.size();
      const std::uint64_t probs = spec.probabilities.size();
      const int n = spec.orders[static_cast<std::size_t>(index % orders)];
      const double p =
          spec.probabilities[static_cast<std::size_t>((index / orders) % probs)];
      return random_digraph(n, p, splitmix64(spec.seed + index));
    }
  }
  throw std::logic_error("unknown generator kind");
}

}  // namespace hamwb
