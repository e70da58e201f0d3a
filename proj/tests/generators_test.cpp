// Copyright 2026 The metridim Authors
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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "metridim.hpp"

namespace metridim {
namespace {

TEST(Gnp, ExtremeProbabilities) {
  EXPECT_EQ(gnp({5, 0.0, 123}).num_edges(), 0u);
  EXPECT_EQ(gnp({5, 1.0, 123}).num_edges(), 10u);
  EXPECT_EQ(gnp({5, 1.0, 7}), complete_graph(5));
}

TEST(Gnp, RejectsBadParams) {
  EXPECT_THROW(gnp({1, 0.5, 0}), Error);
  EXPECT_THROW(gnp({5, -0.1, 0}), Error);
  EXPECT_THROW(gnp({5, 1.5, 0}), Error);
}

// Golden edge set from an independent Python implementation of
// std::mt19937_64 (validated against the standard's 10000th-output value)
// with the same pair order and uniform01 conversion.
TEST(Gnp, GoldenStream) {
  const std::vector<Edge> expected = {{0, 4}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 7}, {3, 4},
                                      {3, 5}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {6, 7}};
  EXPECT_EQ(gnp({8, 0.5, 42}).edges(), expected);
}

TEST(Gnp, EngineMatchesStandardCheckValue) {
  Engine rng;  // default seed 5489
  rng.discard(9999);
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(Gnp, Reproducible) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const GnpParams params{60, 0.1 + 0.08 * static_cast<double>(s), derive_trial_seed(3, s)};
    EXPECT_EQ(to_edge_list(gnp(params)), to_edge_list(gnp(params)));
  }
}

TEST(Gnp, MeanEdgeCountMatchesBinomial) {
  const std::size_t n = 1000;
  const double p = 0.01;
  const double pairs = n * (n - 1) / 2.0;
  const int seeds = 200;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    total += static_cast<double>(gnp({n, p, derive_trial_seed(42, static_cast<std::uint64_t>(s))}).num_edges());
  }
  const double mean = total / seeds;
  const double standard_error = std::sqrt(pairs * p * (1 - p) / seeds);
  EXPECT_NEAR(mean, pairs * p, 3 * standard_error);
  EXPECT_DOUBLE_EQ(pairs * p, 4995.0);
}

TEST(Gnp, MeanEdgeCountIncreasesWithP) {
  double previous = -1.0;
  for (double p : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    double total = 0.0;
    for (std::uint64_t s = 0; s < 30; ++s) total += static_cast<double>(gnp({50, p, derive_trial_seed(11, s)}).num_edges());
    EXPECT_GT(total, previous);
    previous = total;
  }
}

TEST(Structured, Families) {
  EXPECT_EQ(path_graph(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(cycle_graph(3), complete_graph(3));
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  EXPECT_THROW(path_graph(1), Error);
  EXPECT_THROW(cycle_graph(2), Error);
  EXPECT_THROW(complete_graph(1), Error);
  const Graph petersen = petersen_graph();
  EXPECT_EQ(petersen.num_edges(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
  EXPECT_EQ(diameter(petersen), 2u);
}

TEST(Structured, DiameterIdentities) {
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(diameter(path_graph(n)), n - 1);
    EXPECT_EQ(diameter(cycle_graph(n)), n / 2);
    EXPECT_EQ(diameter(complete_graph(n)), 1u);
  }
}

TEST(TrialSeed, GoldenAndDeterministic) {
  // First output of SplitMix64 started at 0.
  EXPECT_EQ(derive_trial_seed(0, 0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(derive_trial_seed(12345, 7), derive_trial_seed(12345, 7));
  for (std::uint64_t s : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    EXPECT_NE(derive_trial_seed(s, 0), derive_trial_seed(s, 1));
  }
}

TEST(TrialSeed, NoCollisionsAcrossIndices) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t master : {0ULL, 99ULL}) {
    for (std::uint64_t t = 0; t < 10000; ++t) seen.insert(derive_trial_seed(master, t));
  }
  EXPECT_EQ(seen.size(), 20000u);
}

TEST(RandomHelpers, UniformBelowStaysInRange) {
  Engine rng(1);
  std::vector<int> counts(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const auto x = uniform_below(rng, 7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 1000, 150);
}

TEST(RandomHelpers, SubsetIsSortedAndDistinct) {
  Engine rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto s = sample_subset(rng, 30, 12);
    ASSERT_EQ(s.size(), 12u);
    EXPECT_TRUE(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end());
    EXPECT_LT(s.back(), 30u);
  }
  EXPECT_EQ(sample_subset(rng, 5, 5), (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

}  // namespace
}  // namespace metridim
