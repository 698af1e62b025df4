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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Violations found by a campaign are printed in full.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamwb/campaign.hpp"
#include "hamwb/conditions.hpp"
#include "hamwb/connectivity.hpp"
#include "hamwb/generators.hpp"
#include "hamwb/hamilton.hpp"
#include "hamwb/insertion.hpp"
#include "hamwb/manifest.hpp"
#include "oracles.hpp"

namespace {

using namespace hamwb;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

void dump_violations(const CampaignReport& r) {
  for (const ViolationRecord& v : r.violations) {
    std::printf("  violation index=%llu check=%s witness=%s\n%s",
                static_cast<unsigned long long>(v.index), v.check.c_str(),
                v.witness.c_str(), v.digraph.c_str());
  }
}

CampaignReport campaign(const std::string& text) {
  const CampaignReport r = run_campaign(parse_manifest(text), 1);
  dump_violations(r);
  return r;
}

std::string counts(const CampaignReport& r) {
  std::ostringstream s;
  s << "scanned " << r.scanned << ", filtered " << r.filtered
    << ", violating " << r.violating() << ", claim2 checked "
    << r.claim2_checked << (r.complete ? "" : ", incomplete");
  return s.str();
}

Outcome tightness_family() {
  Outcome o;
  std::ostringstream s;
  for (int n : {9, 11, 13}) {
    const Digraph d = tightness_example(n);
    const bool strong2 = strongly_k_connected(d, 2).holds;
    const bool ham = hamilton_cycle(d).found.has_value();
    const int longest = longest_cycle(d).optimum;
    const bool path = hamilton_path(d).found.has_value();
    const auto quad = min_quadruple_sum(d);
    const int x = (n - 1) / 2;
    bool degrees = true;
    for (Vertex v = 0; v < n; ++v) {
      degrees = degrees && degree(d, v).total == (v < x ? n + 1 : n - 1);
    }
    // Two X-pairs sum to 4(n+1), two Y-pairs to 4(n-1).
    const int xx = 4 * degree(d, 0).total;
    const int yy = 4 * degree(d, x).total;
    const bool ok = strong2 && !ham && longest == n - 1 && path && quad &&
                    *quad == 4 * n - 4 && degrees && xx == 4 * (n + 1) &&
                    yy == 4 * (n - 1);
    o.pass = o.pass && ok;
    s << "n=" << n << " strong2=" << strong2 << " hamiltonian=" << ham
      << " longest=" << longest << " path=" << path
      << " min4=" << (quad ? *quad : -1) << "; ";
  }
  o.detail = s.str();
  return o;
}

Outcome exhaustive(const CampaignReport& r4, const CampaignReport& r5) {
  Outcome o;
  o.pass = r4.scanned == 4096 && r5.scanned == 1048576 && r4.complete &&
           r5.complete && r4.violating() == 0 && r5.violating() == 0 &&
           r4.filtered > 0 && r5.filtered > 0;
  o.detail = "n=4 " + counts(r4) + "; n=5 " + counts(r5);
  return o;
}

Outcome theorem5(const CampaignReport& ex, const CampaignReport& sampled) {
  Outcome o;
  o.pass = ex.scanned == 4096 + 1048576 && ex.complete &&
           ex.violating() == 0 && sampled.violating() == 0 &&
           sampled.complete && sampled.filtered >= 10000;
  o.detail = "exhaustive n=4,5 " + counts(ex) + "; sampled n=6..9 " +
             counts(sampled);
  return o;
}

Outcome meyniel(const CampaignReport& r) {
  Outcome o;
  o.pass = r.scanned >= 10000 && r.complete && r.violating() == 0 &&
           r.filtered > 0;
  o.detail = counts(r);
  return o;
}

std::vector<Vertex> random_walk(std::mt19937_64& rng, const Digraph& d,
                                std::size_t len, std::vector<bool>& taken) {
  std::vector<Vertex> free;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!taken[static_cast<std::size_t>(v)]) free.push_back(v);
  }
  if (free.empty()) return {};
  std::vector<Vertex> walk{free[rng() % free.size()]};
  taken[static_cast<std::size_t>(walk[0])] = true;
  while (walk.size() < len) {
    std::vector<Vertex> next;
    for (Vertex w : d.out_neighbors(walk.back())) {
      if (!taken[static_cast<std::size_t>(w)]) next.push_back(w);
    }
    if (next.empty()) break;
    walk.push_back(next[rng() % next.size()]);
    taken[static_cast<std::size_t>(walk.back())] = true;
  }
  return walk;
}

Outcome lemma_suites(const CampaignReport& sweep) {
  std::mt19937_64 rng(5);
  int triples = 0;
  int non_insertable = 0;
  int lemma1_failures = 0;
  while (triples < 10000) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double p = 0.1 + 0.85 * static_cast<double>(rng() % 1000) / 1000.0;
    const Digraph d = random_digraph(n, p, rng());
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    const auto walk = random_walk(rng, d, 1 + rng() % static_cast<unsigned>(n - 1), taken);
    std::vector<Vertex> off;
    for (Vertex v = 0; v < n; ++v) {
      if (!taken[static_cast<std::size_t>(v)]) off.push_back(v);
    }
    if (off.empty()) continue;
    const Vertex v = off[rng() % off.size()];
    const VertexSequence path{SequenceKind::path, walk};
    const Lemma1Verdict verdict = check_lemma1_bound(d, path, v);
    ++triples;
    if (!verdict.insertable) {
      ++non_insertable;
      // Degree into P recounted from the arc list.
      const int deg = testing::brute_degree(d, v, taken).total;
      if (deg > static_cast<int>(walk.size()) + 1 || !verdict.holds) {
        ++lemma1_failures;
      }
    }
  }
  Outcome o;
  o.pass = lemma1_failures == 0 && sweep.violating() == 0 &&
           sweep.checked >= 1000 && sweep.complete;
  std::ostringstream s;
  s << "lemma1 triples " << triples << " (non-insertable " << non_insertable
    << ", violations " << lemma1_failures << "); lemma2 digraphs "
    << sweep.checked << ", witnesses " << sweep.witnesses << ", violating "
    << sweep.violating();
  o.detail = s.str();
  return o;
}

Outcome lemma3() {
  std::mt19937_64 rng(9);
  int instances = 0;
  int valid = 0;
  int confirmed = 0;
  int nonempty = 0;
  while (instances < 200) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const double p = 0.4 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    const Digraph d = random_digraph(n, p, rng());
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    const auto q = random_walk(rng, d, 2 + rng() % 3, taken);
    const auto pv = random_walk(rng, d, 1 + rng() % 5, taken);
    if (q.size() < 2 || pv.empty()) continue;
    const VertexSequence qs{SequenceKind::path, q};
    std::vector<Vertex> k;
    for (Vertex z : pv) {
      if (can_insert(d, qs, z) && k.size() < 4) k.push_back(z);
    }
    if (k.empty()) continue;
    ++instances;
    if (k.size() > 1) ++nonempty;
    VertexSet kset;
    for (Vertex z : k) kset.insert(z);
    const auto merged =
        merge_insert_all(d, qs, VertexSequence{SequenceKind::path, pv}, kset);
    if (testing::brute_merge_exists(d, q, pv, k)) ++confirmed;
    if (!merged) continue;
    const auto& m = merged->vertices;
    bool ok = is_valid(d, *merged) && m.front() == q.front() &&
              m.back() == q.back();
    for (Vertex v : q) ok = ok && std::find(m.begin(), m.end(), v) != m.end();
    for (Vertex v : k) ok = ok && std::find(m.begin(), m.end(), v) != m.end();
    for (Vertex v : m) {
      ok = ok && (std::find(q.begin(), q.end(), v) != q.end() ||
                  std::find(pv.begin(), pv.end(), v) != pv.end());
    }
    if (ok) ++valid;
  }
  Outcome o;
  o.pass = valid == instances && confirmed == instances;
  std::ostringstream s;
  s << "instances " << instances << " (|K|>1: " << nonempty << "), valid "
    << valid << ", confirmed by exhaustive search " << confirmed;
  o.detail = s.str();
  return o;
}

Outcome oracle(const CampaignReport& r) {
  Outcome o;
  o.pass = r.scanned == 500 && r.checked == 500 && r.violating() == 0 &&
           r.complete;
  o.detail = counts(r);
  return o;
}

Outcome claim2(const std::vector<const CampaignReport*>& runs) {
  std::uint64_t checked = 0;
  std::uint64_t survivors = 0;
  std::uint64_t violations = 0;
  for (const CampaignReport* r : runs) {
    checked += r->claim2_checked;
    survivors += r->filtered;
    violations += static_cast<std::uint64_t>(
        std::count_if(r->violations.begin(), r->violations.end(),
                      [](const ViolationRecord& v) { return v.check == "claim2"; }));
  }
  Outcome o;
  // Every survivor of the conjecture1 filter satisfies the hypothesis, so
  // each must have been checked.
  o.pass = violations == 0 && checked >= survivors && checked > 0;
  o.detail = "hypothesis-satisfying digraphs checked " +
             std::to_string(checked) + ", violations " +
             std::to_string(violations);
  return o;
}

}  // namespace

int main() {
  report(1, "tightness family", tightness_family());

  const CampaignReport c4 = campaign(
      "campaign = verify-conjecture1\ngenerator = exhaustive\nn = 4\n");
  const CampaignReport c5 = campaign(
      "campaign = verify-conjecture1\ngenerator = exhaustive\nn = 5\n");
  report(2, "conjecture 1 exhaustive sweep", exhaustive(c4, c5));

  const CampaignReport t_ex = campaign(
      "campaign = verify-theorem5\ngenerator = exhaustive\nn = 4,5\n");
  const CampaignReport t_sampled = campaign(
      "campaign = verify-theorem5\ngenerator = random\nn = 6..9\n"
      "p = 0.5,0.6,0.7,0.8,0.9\nseed = 2024\nmax_instances = 30000\n");
  report(3, "theorem 5 sweep", theorem5(t_ex, t_sampled));

  const CampaignReport m = campaign(
      "campaign = verify-meyniel\ngenerator = random\nn = 4..9\n"
      "p = 0.5,0.7,0.9\nseed = 31\nmax_instances = 12000\n");
  report(4, "meyniel regression", meyniel(m));

  const CampaignReport sweep = campaign(
      "campaign = lemma2-sweep\ngenerator = random\nn = 5..9\n"
      "p = 0.3,0.4,0.5,0.6\nseed = 77\nmax_instances = 8000\n");
  report(5, "lemma 1 / lemma 2 property suites", lemma_suites(sweep));

  report(6, "lemma 3 constructive check", lemma3());

  const CampaignReport od = campaign(
      "campaign = oracle-diff\ngenerator = random\nn = 3..7\n"
      "p = 0.2,0.4,0.6,0.8\nseed = 13\nmax_instances = 500\n");
  report(7, "oracle equivalence", oracle(od));

  report(8, "claim 2 consequence", claim2({&c4, &c5, &t_ex, &t_sampled}));

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
