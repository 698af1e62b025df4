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
#include <string>
#include <string_view>
#include <vector>

#include "hamwb/conditions.hpp"
#include "hamwb/generators.hpp"

namespace hamwb {

enum class Campaign {
  verify_conjecture1,  // survivors must be hamiltonian
  verify_theorem5,     // survivors need a cycle of length >= n-1 and a Hamilton path
  verify_meyniel,      // survivors must be hamiltonian
  lemma2_sweep,        // pair bound on every C-path of a longest cycle
  oracle_diff,         // subset DP against the permutation oracle
};

std::string_view campaign_name(Campaign c);
std::optional<Campaign> parse_campaign(std::string_view name);

struct Budget {
  /// 0 means the whole index space; random generators require a positive
  /// value, which is then the sample size.
  std::uint64_t max_instances = 0;
  /// Wall-clock cap; 0 disables it. Hitting it marks the report incomplete.
  double max_seconds = 0;

  bool operator==(const Budget&) const = default;
};

/// A verification run, read from a flat "key = value" file:
///
///   campaign      verify-conjecture1 | verify-theorem5 | verify-meyniel |
///                 lemma2-sweep | oracle-diff
///   generator     exhaustive | random | tightness
///   n             comma list; "a..b" ranges allowed
///   p             comma list of arc probabilities (random)
///   seed          unsigned 64-bit
///   first         first instance index (default 0)
///   filters       comma list of condition names, or "none"
///   connectivity  required strong connectivity k (0 = none)
///   max_instances, max_seconds, output
///
/// When `filters` and `connectivity` are absent the campaign's defaults
/// apply: conjecture1 with k = 2 for the conjecture1 and theorem5
/// campaigns, meyniel with k = 1 for verify-meyniel, nothing otherwise.
struct RunManifest {
  Campaign campaign = Campaign::verify_conjecture1;
  GeneratorSpec generator;
  std::uint64_t first = 0;
  std::vector<Condition> filters;
  int connectivity = 0;
  Budget budget;
  std::string output;

  bool operator==(const RunManifest&) const = default;
};

/// Throws ParseError with the offending line.
RunManifest parse_manifest(std::string_view text);

/// Text form accepted by parse_manifest().
std::string serialize_manifest(const RunManifest& m);

/// Campaign defaults for filters and connectivity.
void apply_default_filters(RunManifest& m);

}  // namespace hamwb
