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

#include "hamwb/conditions.hpp"

#include <random>

#include <gtest/gtest.h>

#include "hamwb/error.hpp"
#include "hamwb/generators.hpp"
#include "oracles.hpp"

namespace hamwb {
namespace {

const Digraph kTriangle = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kEmpty4(4, {});

struct Degrees {
  std::vector<int> out, in, total;
};

Degrees scan_degrees(const Digraph& d) {
  Degrees g;
  const auto n = static_cast<std::size_t>(d.order());
  g.out.assign(n, 0);
  g.in.assign(n, 0);
  for (const Arc& a : d.arcs()) {
    ++g.out[static_cast<std::size_t>(a.from)];
    ++g.in[static_cast<std::size_t>(a.to)];
  }
  for (std::size_t v = 0; v < n; ++v) g.total.push_back(g.out[v] + g.in[v]);
  return g;
}

bool nonadj(const Digraph& d, Vertex u, Vertex v) {
  return u != v && !testing::arc(d, u, v) && !testing::arc(d, v, u);
}

// Recomputes the inequality named by the report on its witness.
int recompute(const Digraph& d, const ConditionReport& r) {
  const Degrees g = scan_degrees(d);
  const auto& w = r.violation->vertices;
  auto D = [&](Vertex v) { return g.total[static_cast<std::size_t>(v)]; };
  auto O = [&](Vertex v) { return g.out[static_cast<std::size_t>(v)]; };
  auto I = [&](Vertex v) { return g.in[static_cast<std::size_t>(v)]; };
  switch (r.condition) {
    case Condition::ghouila_houri: return D(w[0]);
    case Condition::woodall:
      EXPECT_FALSE(testing::arc(d, w[0], w[1]));
      return O(w[0]) + I(w[1]);
    case Condition::meyniel:
      EXPECT_TRUE(nonadj(d, w[0], w[1]));
      return D(w[0]) + D(w[1]);
    case Condition::manoussakis:
    case Condition::conjecture2:
      EXPECT_TRUE(nonadj(d, w[0], w[1]));
      if (r.violation->clause == 1) {
        EXPECT_FALSE(testing::arc(d, w[0], w[2]));
        return D(w[0]) + D(w[1]) + O(w[0]) + I(w[2]);
      }
      EXPECT_FALSE(testing::arc(d, w[2], w[0]));
      return D(w[0]) + D(w[1]) + O(w[2]) + I(w[0]);
    case Condition::conjecture1:
    case Condition::conjecture1_disjoint:
      EXPECT_TRUE(nonadj(d, w[0], w[1]));
      EXPECT_TRUE(nonadj(d, w[2], w[3]));
      EXPECT_FALSE(w[0] == w[2] && w[1] == w[3]);
      return D(w[0]) + D(w[1]) + D(w[2]) + D(w[3]);
    case Condition::claim2:
      return 2 * D(w[0]) + D(w[1]) + D(w[2]);
  }
  return -1;
}

// Brute force over ordered selections of two distinct nonadjacent pairs.
std::optional<int> brute_min_quadruple(const Digraph& d, bool disjoint) {
  const Degrees g = scan_degrees(d);
  const int n = d.order();
  std::optional<int> best;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex w = 0; w < n; ++w)
        for (Vertex z = w + 1; z < n; ++z) {
          if (!nonadj(d, x, y) || !nonadj(d, w, z)) continue;
          if (x == w && y == z) continue;
          if (disjoint && (x == w || x == z || y == w || y == z)) continue;
          const int s = g.total[static_cast<std::size_t>(x)] +
                        g.total[static_cast<std::size_t>(y)] +
                        g.total[static_cast<std::size_t>(w)] +
                        g.total[static_cast<std::size_t>(z)];
          if (!best || s < *best) best = s;
        }
  return best;
}

TEST(GhouilaHouriTest, Examples) {
  EXPECT_TRUE(check_ghouila_houri(complete_digraph(3)).holds());
  const ConditionReport r = check_ghouila_houri(kTriangle);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.violation->vertices, (std::vector<Vertex>{0}));
  EXPECT_EQ(r.violation->sum, 2);
  EXPECT_EQ(r.bound, 3);
  const ConditionReport t = check_ghouila_houri(tightness_example(9));
  ASSERT_FALSE(t.holds());
  EXPECT_EQ(t.violation->vertices, (std::vector<Vertex>{4}));
  EXPECT_EQ(t.violation->sum, 8);
}

TEST(WoodallTest, Examples) {
  EXPECT_TRUE(check_woodall(complete_digraph(6)).holds());
  EXPECT_TRUE(check_woodall(make_digraph(2, {{0, 1}, {1, 0}})).holds());
  const ConditionReport r = check_woodall(kTriangle);
  ASSERT_FALSE(r.holds());
  // (0,2) is the lexicographically first non-arc; (1,0) fails too.
  EXPECT_EQ(r.violation->vertices, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(r.violation->sum, 2);
}

TEST(MeynielTest, Examples) {
  EXPECT_TRUE(check_meyniel(kTriangle).holds());
  const ConditionReport e = check_meyniel(kEmpty4);
  ASSERT_FALSE(e.holds());
  EXPECT_EQ(e.violation->sum, 0);
  EXPECT_EQ(e.bound, 7);
  const ConditionReport t = check_meyniel(tightness_example(9));
  ASSERT_FALSE(t.holds());
  EXPECT_EQ(t.violation->vertices, (std::vector<Vertex>{4, 5}));
  EXPECT_EQ(t.violation->sum, 16);
  EXPECT_EQ(t.bound, 17);
}

TEST(ManoussakisTest, Examples) {
  EXPECT_TRUE(check_manoussakis_t4(kTriangle).holds());
  const ConditionReport e = check_manoussakis_t4(kEmpty4);
  ASSERT_FALSE(e.holds());
  EXPECT_EQ(e.bound, 10);
  EXPECT_EQ(e.violation->sum, 0);
  // Regression value from the full triple scan: X-rooted triples all pass
  // (sum 30), the first failing triple is (4,5,6) with 8+8+4+4 = 24.
  const ConditionReport t = check_manoussakis_t4(tightness_example(9));
  ASSERT_FALSE(t.holds());
  EXPECT_EQ(t.violation->vertices, (std::vector<Vertex>{4, 5, 6}));
  EXPECT_EQ(t.violation->sum, 24);
  EXPECT_EQ(t.violation->clause, 1);
  EXPECT_EQ(t.bound, 25);
}

TEST(Conjecture1Test, TightnessExample) {
  const Digraph d = tightness_example(9);
  const ConditionReport r = check_conjecture1_hypothesis(d);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.bound, 33);
  EXPECT_EQ(r.violation->sum, 32);
  EXPECT_EQ(r.violation->vertices, (std::vector<Vertex>{4, 5, 4, 6}));
  EXPECT_EQ(min_quadruple_sum(d), 32);
  // Two X-pairs: 4(n+1).
  EXPECT_EQ(degree(d, 0).total + degree(d, 1).total + degree(d, 2).total +
                degree(d, 3).total,
            40);

  const ConditionReport disjoint =
      check_conjecture1_hypothesis(d, PairSharing::vertex_disjoint);
  ASSERT_FALSE(disjoint.holds());
  EXPECT_EQ(disjoint.violation->vertices, (std::vector<Vertex>{4, 5, 6, 7}));
}

TEST(Conjecture1Test, VacuousCases) {
  EXPECT_TRUE(check_conjecture1_hypothesis(complete_digraph(5)).holds());
  // Exactly one nonadjacent pair: fewer than two pairs, vacuous.
  const Digraph one_gap = make_digraph(3, {{0, 2}, {2, 0}, {1, 2}, {2, 1}});
  EXPECT_TRUE(check_conjecture1_hypothesis(one_gap).holds());
  EXPECT_FALSE(min_quadruple_sum(one_gap).has_value());
}

TEST(Conjecture1Test, SharingMatters) {
  // Vertex 0 isolated next to a bidirected triangle: the three nonadjacent
  // pairs all contain 0, so the disjoint reading has nothing to check.
  const Digraph star =
      make_digraph(4, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}});
  EXPECT_FALSE(check_conjecture1_hypothesis(star).holds());
  EXPECT_TRUE(
      check_conjecture1_hypothesis(star, PairSharing::vertex_disjoint).holds());
}

TEST(Claim2Test, Examples) {
  EXPECT_TRUE(check_claim2(complete_digraph(4)).holds());
  EXPECT_THROW(check_claim2(kEmpty4), PreconditionError);
}

TEST(Conjecture2Test, Examples) {
  EXPECT_TRUE(check_conjecture2_hypothesis(kTriangle).holds());
  EXPECT_FALSE(check_conjecture2_hypothesis(kEmpty4).holds());
  EXPECT_TRUE(check_conjecture2_hypothesis(complete_digraph(5)).holds());
  EXPECT_EQ(check_conjecture2_hypothesis(kEmpty4).bound, 13);
}

TEST(ConditionNamesTest, RoundTrip) {
  for (Condition c : all_conditions()) {
    EXPECT_EQ(parse_condition(condition_name(c)), c);
  }
  EXPECT_FALSE(parse_condition("chvatal").has_value());
}

class RandomConditionsTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng{1234};
};

TEST_F(RandomConditionsTest, WitnessesReproduceTheirSums) {
  for (int trial = 0; trial < 800; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const Digraph d = testing::sample_digraph(rng, n, p);
    for (Condition c : all_conditions()) {
      if (c == Condition::claim2 && !check_conjecture1_hypothesis(d).holds()) {
        continue;
      }
      const ConditionReport r = check_condition(d, c);
      if (r.holds()) continue;
      EXPECT_EQ(recompute(d, r), r.violation->sum) << condition_name(c);
      EXPECT_LT(r.violation->sum, r.bound);
    }
  }
}

TEST_F(RandomConditionsTest, QuadrupleMinimumMatchesBruteForce) {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const Digraph d = testing::sample_digraph(rng, n, p);
    for (bool disjoint : {false, true}) {
      const auto sharing = disjoint ? PairSharing::vertex_disjoint
                                    : PairSharing::shared_vertex_allowed;
      const auto brute = brute_min_quadruple(d, disjoint);
      EXPECT_EQ(min_quadruple_sum(d, sharing), brute);
      const bool holds = !brute || *brute >= 4 * n - 3;
      EXPECT_EQ(check_conjecture1_hypothesis(d, sharing).holds(), holds);
    }
  }
}

TEST_F(RandomConditionsTest, Conjecture2ImpliesTheorem4Hypothesis) {
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const double p = 0.5 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const Digraph d = testing::sample_digraph(rng, n, p);
    if (check_conjecture2_hypothesis(d).holds()) {
      EXPECT_TRUE(check_manoussakis_t4(d).holds());
    }
  }
}

TEST_F(RandomConditionsTest, CompleteUnderlyingGraphIsVacuous) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    // A tournament-like digraph: at least one arc per pair.
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const auto r = rng() % 3;
        if (r != 1) arcs.push_back({u, v});
        if (r != 0) arcs.push_back({v, u});
      }
    const Digraph d(n, arcs);
    for (Condition c : {Condition::meyniel, Condition::manoussakis,
                        Condition::conjecture1, Condition::conjecture1_disjoint,
                        Condition::claim2, Condition::conjecture2}) {
      EXPECT_TRUE(check_condition(d, c).holds()) << condition_name(c);
    }
  }
}

TEST_F(RandomConditionsTest, Claim2FollowsFromHypothesis) {
  int satisfied = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const double p = 0.6 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    const Digraph d = testing::sample_digraph(rng, n, p);
    if (!check_conjecture1_hypothesis(d).holds()) continue;
    ++satisfied;
    EXPECT_TRUE(check_claim2(d).holds());
  }
  EXPECT_GT(satisfied, 100);
}

}  // namespace
}  // namespace hamwb
