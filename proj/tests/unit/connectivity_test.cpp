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

#include "hamwb/connectivity.hpp"

#include <random>

#include <gtest/gtest.h>

#include "hamwb/generators.hpp"
#include "oracles.hpp"

namespace hamwb {
namespace {

TEST(StrongConnectivityTest, TriangleIsOneButNotTwoConnected) {
  const Digraph d = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(strongly_k_connected(d, 1).holds);
  const ConnectivityReport r = strongly_k_connected(d, 2);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (Arc{0, 1}));
  EXPECT_EQ(r.witness_paths, 1);
}

TEST(StrongConnectivityTest, CompleteBidirectedTriangleIsTwoConnected) {
  EXPECT_TRUE(strongly_k_connected(complete_digraph(3), 2).holds);
  EXPECT_FALSE(strongly_k_connected(complete_digraph(3), 3).holds);
}

TEST(StrongConnectivityTest, TightnessExampleIsTwoConnected) {
  for (int n : {9, 11, 13}) {
    EXPECT_TRUE(strongly_k_connected(tightness_example(n), 2).holds) << n;
  }
  // Each Y vertex has exactly (n-1)/2 = 4 out-neighbours at n = 9.
  EXPECT_TRUE(strongly_k_connected(tightness_example(9), 4).holds);
  EXPECT_FALSE(strongly_k_connected(tightness_example(9), 5).holds);
}

TEST(StrongConnectivityTest, DegenerateOrdersAreVacuous) {
  EXPECT_TRUE(strongly_k_connected(Digraph(1, {}), 5).holds);
  EXPECT_TRUE(strongly_k_connected(Digraph(0, {}), 1).holds);
  EXPECT_THROW(strongly_k_connected(Digraph(2, {}), 0), std::invalid_argument);
}

TEST(StrongConnectivityTest, DirectArcCountsAsOnePath) {
  const Digraph d = make_digraph(3, {{0, 1}, {0, 2}, {2, 1}});
  EXPECT_EQ(max_disjoint_paths(d, 0, 1), 2);
  EXPECT_EQ(max_disjoint_paths(d, 1, 0), 0);
}

TEST(StrongConnectivityTest, MengerMatchesBruteForceCut) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Digraph d = testing::sample_digraph(rng, n, p);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        ASSERT_EQ(max_disjoint_paths(d, u, v), testing::brute_menger(d, u, v))
            << "pair " << u << "," << v << " trial " << trial;
      }
    }
  }
}

TEST(StrongConnectivityTest, MonotoneInK) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Digraph d = testing::sample_digraph(rng, n, 0.7);
    for (int k = 2; k <= 4; ++k) {
      if (strongly_k_connected(d, k).holds) {
        EXPECT_TRUE(strongly_k_connected(d, k - 1).holds);
      }
    }
  }
}

}  // namespace
}  // namespace hamwb
