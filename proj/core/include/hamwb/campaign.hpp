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
#include <string>
#include <string_view>
#include <vector>

#include "hamwb/digraph.hpp"
#include "hamwb/manifest.hpp"

namespace hamwb {

/// One instance that failed a campaign's target check. Everything needed to
/// reproduce it is in `digraph` (arc-list text) and `check`.
struct ViolationRecord {
  std::uint64_t index = 0;
  int order = 0;
  /// hamiltonian | longest-cycle | hamilton-path | claim2 | lemma2 |
  /// oracle-cycle | oracle-path | oracle-longest-cycle
  std::string check;
  std::string witness;
  std::string digraph;

  bool operator==(const ViolationRecord&) const = default;
};

struct CampaignReport {
  RunManifest manifest;
  /// exhaustive | sampled | fixed
  std::string regime;
  std::uint64_t scanned = 0;
  /// Instances that passed every filter.
  std::uint64_t filtered = 0;
  /// Instances the target check actually applied to. Equal to `filtered`
  /// except for lemma2-sweep, which needs a non-hamiltonian digraph with at
  /// least one C-path.
  std::uint64_t checked = 0;
  /// Instances on which the claim2 consequence was evaluated.
  std::uint64_t claim2_checked = 0;
  /// C-path witnesses examined by lemma2-sweep.
  std::uint64_t witnesses = 0;
  std::vector<ViolationRecord> violations;
  bool complete = true;
  /// Not part of the rendered report, which must stay byte-stable.
  double wall_seconds = 0;

  std::uint64_t violating() const { return violations.size(); }
};

/// True when `d` satisfies every filter condition and the connectivity
/// requirement of `m`.
bool passes_filters(const RunManifest& m, const Digraph& d);

/// Runs a campaign, splitting the index range over `jobs` worker threads.
/// The result (apart from wall_seconds) does not depend on `jobs`.
/// Throws std::invalid_argument when the manifest cannot be run (orders
/// beyond the exact-search limits, for instance).
CampaignReport run_campaign(const RunManifest& m, int jobs = 1);

/// JSON lines: a header record echoing the manifest, one record per
/// violation in index order, and a summary record.
std::string render_report(const CampaignReport& report);

/// Re-parses the violation's digraph and re-runs its check; true when the
/// violation is reproduced.
bool reproduces(const ViolationRecord& v);

}  // namespace hamwb
