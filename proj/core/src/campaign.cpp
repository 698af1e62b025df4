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

#include "hamwb/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "hamwb/connectivity.hpp"
#include "hamwb/hamilton.hpp"
#include "hamwb/insertion.hpp"
#include "hamwb/io.hpp"
#include "json.hpp"

namespace hamwb {

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t filtered = 0;
  std::uint64_t checked = 0;
  std::uint64_t claim2_checked = 0;
  std::uint64_t witnesses = 0;
  std::vector<ViolationRecord> violations;
  bool stopped_early = false;
};

struct Lemma2Outcome {
  std::uint64_t witnesses = 0;
  std::optional<std::string> failure;
};

Lemma2Outcome lemma2_on(const Digraph& d) {
  Lemma2Outcome out;
  if (hamilton_cycle(d).found) return out;
  const SearchOutcome longest = longest_cycle(d);
  if (!longest.found) return out;
  const VertexSequence& cycle = *longest.found;
  for (VertexSet component : weak_components(d, cycle.vertex_set())) {
    const auto w = find_c_path(d, cycle, component);
    if (!w) continue;
    ++out.witnesses;
    const Lemma2Verdict verdict = check_lemma2_bound(d, *w, true);
    if (verdict.holds || out.failure) continue;
    for (const PairSum& ps : verdict.sums) {
      if (ps.sum > verdict.bound) {
        out.failure = "cycle=" + format_vertices(cycle.vertices) +
                      " y=" + std::to_string(ps.y) + " s=" +
                      std::to_string(ps.s) + " sum=" + std::to_string(ps.sum) +
                      " bound=" + std::to_string(verdict.bound);
        break;
      }
    }
  }
  return out;
}

std::optional<std::string> oracle_mismatch(const Digraph& d, OracleTarget t) {
  SearchOutcome dp;
  switch (t) {
    case OracleTarget::cycle: dp = hamilton_cycle(d); break;
    case OracleTarget::path: dp = hamilton_path(d); break;
    case OracleTarget::longest_cycle: dp = longest_cycle(d); break;
  }
  const SearchOutcome oracle = permutation_oracle(d, t);
  if (dp.found.has_value() == oracle.found.has_value() &&
      dp.optimum == oracle.optimum) {
    return std::nullopt;
  }
  return "dp=" + std::to_string(dp.optimum) +
         " oracle=" + std::to_string(oracle.optimum);
}

std::string_view oracle_check_name(OracleTarget t) {
  switch (t) {
    case OracleTarget::cycle: return "oracle-cycle";
    case OracleTarget::path: return "oracle-path";
    case OracleTarget::longest_cycle: return "oracle-longest-cycle";
  }
  return "oracle";
}

// Runs the campaign's target checks on one filtered instance. Each entry of
// the result is (check, witness).
std::vector<std::pair<std::string, std::string>> target_failures(
    Campaign campaign, const Digraph& d, Partial& counts) {
  std::vector<std::pair<std::string, std::string>> failures;
  const int n = d.order();
  auto claim2 = [&] {
    if (!check_conjecture1_hypothesis(d).holds()) return;
    ++counts.claim2_checked;
    const ConditionReport r = check_claim2(d);
    if (!r.holds()) {
      failures.emplace_back(
          "claim2", "triple=" + format_vertices(r.violation->vertices) +
                        " sum=" + std::to_string(r.violation->sum) +
                        " bound=" + std::to_string(r.bound));
    }
  };

  switch (campaign) {
    case Campaign::verify_conjecture1:
    case Campaign::verify_meyniel: {
      ++counts.checked;
      const SearchOutcome hc = hamilton_cycle(d);
      if (!hc.found) {
        const SearchOutcome lc = longest_cycle(d);
        failures.emplace_back("hamiltonian",
                              "longest=" + std::to_string(lc.optimum));
      }
      if (campaign == Campaign::verify_conjecture1) claim2();
      break;
    }
    case Campaign::verify_theorem5: {
      ++counts.checked;
      const SearchOutcome lc = longest_cycle(d);
      if (lc.optimum < n - 1) {
        failures.emplace_back("longest-cycle",
                              "longest=" + std::to_string(lc.optimum) +
                                  " needed=" + std::to_string(n - 1));
      }
      if (!hamilton_path(d).found) failures.emplace_back("hamilton-path", "none");
      claim2();
      break;
    }
    case Campaign::lemma2_sweep: {
      const Lemma2Outcome out = lemma2_on(d);
      if (out.witnesses > 0) ++counts.checked;
      counts.witnesses += out.witnesses;
      if (out.failure) failures.emplace_back("lemma2", *out.failure);
      break;
    }
    case Campaign::oracle_diff: {
      ++counts.checked;
      for (OracleTarget t : {OracleTarget::cycle, OracleTarget::path,
                             OracleTarget::longest_cycle}) {
        if (auto mismatch = oracle_mismatch(d, t)) {
          failures.emplace_back(std::string(oracle_check_name(t)), *mismatch);
        }
      }
      break;
    }
  }
  return failures;
}

void check_runnable(const RunManifest& m) {
  validate(m.generator);
  const int limit = m.campaign == Campaign::oracle_diff ? kMaxOracleOrder
                                                        : kMaxExactOrder;
  for (int n : m.generator.orders) {
    if (n > limit) {
      throw std::invalid_argument("campaign " +
                                  std::string(campaign_name(m.campaign)) +
                                  " supports orders up to " +
                                  std::to_string(limit));
    }
  }
  if (m.generator.kind == GeneratorKind::random && m.budget.max_instances == 0) {
    throw std::invalid_argument("random campaigns need max_instances");
  }
  if (std::find(m.filters.begin(), m.filters.end(), Condition::claim2) !=
      m.filters.end()) {
    throw std::invalid_argument("claim2 cannot be used as a filter");
  }
}

void scan_range(const RunManifest& m, std::uint64_t lo, std::uint64_t hi,
                std::optional<Clock::time_point> deadline, Partial& out) {
  for (std::uint64_t index = lo; index < hi; ++index) {
    if (deadline && (index - lo) % 256 == 0 && Clock::now() >= *deadline) {
      out.stopped_early = true;
      return;
    }
    const Digraph d = generate(m.generator, index);
    ++out.scanned;
    if (!passes_filters(m, d)) continue;
    ++out.filtered;
    for (auto& [check, witness] : target_failures(m.campaign, d, out)) {
      out.violations.push_back(ViolationRecord{
          index, d.order(), std::move(check), std::move(witness),
          serialize_digraph(d)});
    }
  }
}

}  // namespace

bool passes_filters(const RunManifest& m, const Digraph& d) {
  for (Condition c : m.filters) {
    if (!check_condition(d, c).holds()) return false;
  }
  if (m.connectivity > 0 && !strongly_k_connected(d, m.connectivity).holds) {
    return false;
  }
  return true;
}

CampaignReport run_campaign(const RunManifest& m, int jobs) {
  check_runnable(m);
  const auto started = Clock::now();
  CampaignReport report;
  report.manifest = m;

  const std::optional<std::uint64_t> space = instance_space(m.generator);
  std::uint64_t requested = 0;
  switch (m.generator.kind) {
    case GeneratorKind::exhaustive: report.regime = "exhaustive"; break;
    case GeneratorKind::random: report.regime = "sampled"; break;
    case GeneratorKind::tightness: report.regime = "fixed"; break;
  }
  bool whole_space = true;
  if (space) {
    const std::uint64_t available = m.first < *space ? *space - m.first : 0;
    requested = available;
    if (m.budget.max_instances > 0 && m.budget.max_instances < available) {
      requested = m.budget.max_instances;
      whole_space = false;
    }
    if (m.first > 0) whole_space = false;
  } else {
    requested = m.budget.max_instances;
  }

  std::optional<Clock::time_point> deadline;
  if (m.budget.max_seconds > 0) {
    deadline = started + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(m.budget.max_seconds));
  }

  // Block-cyclic split: block b covers [first + b*kBlock, ...) and goes to
  // worker b % workers. Dense instances cluster at high labelled indices, so
  // contiguous halves would leave one worker with most of the work.
  constexpr std::uint64_t kBlock = 2048;
  const std::uint64_t blocks = (requested + kBlock - 1) / kBlock;
  const std::uint64_t workers = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)),
                                 blocks));
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](std::uint64_t w) {
    try {
      for (std::uint64_t b = w; b < blocks; b += workers) {
        const std::uint64_t lo = m.first + b * kBlock;
        const std::uint64_t hi = m.first + std::min(requested, (b + 1) * kBlock);
        scan_range(m, lo, hi, deadline, partials[w]);
        if (partials[w].stopped_early) break;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  bool stopped = false;
  for (Partial& p : partials) {
    report.scanned += p.scanned;
    report.filtered += p.filtered;
    report.checked += p.checked;
    report.claim2_checked += p.claim2_checked;
    report.witnesses += p.witnesses;
    stopped = stopped || p.stopped_early;
    for (ViolationRecord& v : p.violations) {
      report.violations.push_back(std::move(v));
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const ViolationRecord& a, const ViolationRecord& b) {
                     return a.index < b.index;
                   });
  report.complete = !stopped && report.scanned == requested &&
                    (!space || whole_space);
  report.wall_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

std::string render_report(const CampaignReport& report) {
  using nlohmann::ordered_json;
  const RunManifest& m = report.manifest;
  std::string out;

  ordered_json generator;
  generator["kind"] = generator_name(m.generator.kind);
  generator["orders"] = m.generator.orders;
  if (m.generator.kind == GeneratorKind::random) {
    generator["probabilities"] = m.generator.probabilities;
  }
  generator["seed"] = m.generator.seed;
  std::vector<std::string> filters;
  for (Condition c : m.filters) filters.emplace_back(condition_name(c));

  ordered_json header;
  header["record"] = "header";
  header["schema"] = "hamwb-report/1";
  header["campaign"] = campaign_name(m.campaign);
  header["generator"] = generator;
  header["first"] = m.first;
  header["filters"] = filters;
  header["connectivity"] = m.connectivity;
  header["max_instances"] = m.budget.max_instances;
  header["max_seconds"] = m.budget.max_seconds;
  out += header.dump() + "\n";

  for (const ViolationRecord& v : report.violations) {
    ordered_json rec;
    rec["record"] = "violation";
    rec["index"] = v.index;
    rec["order"] = v.order;
    rec["check"] = v.check;
    rec["witness"] = v.witness;
    rec["digraph"] = v.digraph;
    out += rec.dump() + "\n";
  }

  ordered_json summary;
  summary["record"] = "summary";
  summary["regime"] = report.regime;
  summary["scanned"] = report.scanned;
  summary["filtered"] = report.filtered;
  summary["checked"] = report.checked;
  summary["claim2_checked"] = report.claim2_checked;
  summary["witnesses"] = report.witnesses;
  summary["violating"] = report.violating();
  summary["complete"] = report.complete;
  out += summary.dump() + "\n";
  return out;
}

bool reproduces(const ViolationRecord& v) {
  const Digraph d = parse_digraph(v.digraph, TextFormat::arc_list);
  const int n = d.order();
  if (v.check == "hamiltonian") return !hamilton_cycle(d).found;
  if (v.check == "longest-cycle") return longest_cycle(d).optimum < n - 1;
  if (v.check == "hamilton-path") return !hamilton_path(d).found;
  if (v.check == "claim2") {
    return check_conjecture1_hypothesis(d).holds() && !check_claim2(d).holds();
  }
  if (v.check == "lemma2") return lemma2_on(d).failure.has_value();
  for (OracleTarget t : {OracleTarget::cycle, OracleTarget::path,
                         OracleTarget::longest_cycle}) {
    if (v.check == oracle_check_name(t)) {
      return oracle_mismatch(d, t).has_value();
    }
  }
  return false;
}

}  // namespace hamwb
