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

#include <numeric>

#include <gtest/gtest.h>

#include "metridim.hpp"
#include "test_graphs.hpp"

namespace metridim {
namespace {

using Sizes = std::vector<std::size_t>;
using V = std::vector<Vertex>;

TEST(SphereSizes, Examples) {
  EXPECT_EQ(sphere_sizes(path_graph(5), 0, 4), (Sizes{1, 1, 1, 1, 1}));
  EXPECT_EQ(sphere_sizes(complete_graph(6), 0, 1), (Sizes{1, 5}));
  EXPECT_EQ(sphere_sizes(cycle_graph(8), 0, 4), (Sizes{1, 2, 2, 2, 1}));
  EXPECT_EQ(sphere_sizes(cycle_graph(8), 0, 6), (Sizes{1, 2, 2, 2, 1, 0, 0}));
  EXPECT_THROW(sphere_sizes(build_graph(4, {{0, 1}, {2, 3}}), 0, 2), Error);
}

TEST(SphereExcludingLandmarks, Examples) {
  const Graph p5 = path_graph(5);
  EXPECT_EQ(sphere_excluding_landmarks(p5, 0, V{4}, 1), 1u);
  EXPECT_EQ(sphere_excluding_landmarks(p5, 0, V{4}, 2), 0u);
  EXPECT_EQ(sphere_excluding_landmarks(complete_graph(6), 0, V{1}, 1), 0u);
  try {
    sphere_excluding_landmarks(p5, 4, V{4}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kXInR);
  }
}

TEST(SphereExcludingLandmarks, DisjointBallsKeepWholeSphere) {
  const Graph p = path_graph(20);
  for (Distance i = 1; i <= 4; ++i) {
    // dist(0, 15) = 15 > 2i + 1, so N(15, i) misses S(0, i).
    EXPECT_EQ(sphere_excluding_landmarks(p, 0, V{15}, i), 1u);
  }
}

TEST(SphereProperties, PartitionMonotoneBallsAndExclusionBound) {
  for (const auto& g : testing::connected_gnp_samples(150, 0.04, 5, 8)) {
    const std::size_t n = g.num_vertices();
    Engine rng(3);
    const auto landmarks = sample_subset(rng, n, 4);
    for (Vertex v = 0; v < n; v += 13) {
      const auto sizes = sphere_sizes(g, v, static_cast<Distance>(n));
      EXPECT_EQ(sizes[0], 1u);
      EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), n);
      std::size_t ball = 0, previous = 0;
      for (std::size_t r = 0; r < sizes.size() && previous < n; ++r) {
        ball += sizes[r];
        EXPECT_GT(ball, previous);
        previous = ball;
      }
      if (std::binary_search(landmarks.begin(), landmarks.end(), v)) continue;
      for (Distance r = 1; r <= 3; ++r) {
        EXPECT_LE(sphere_excluding_landmarks(g, v, landmarks, r), sizes[r]);
      }
    }
  }
}

ExpansionParams small_params() {
  ExpansionParams params;
  params.n = 3000;
  params.p = 40.0 / 2999.0;
  params.max_radius = 2;
  params.trials = 3;
  params.seed = 17;
  params.landmark_count = 3;
  params.sample_count = 50;
  return params;
}

TEST(ExpansionReport, RecordsAreConsistent) {
  const auto report = expansion_report(small_params());
  EXPECT_NEAR(report.d, 40.0, 1e-9);
  EXPECT_NEAR(report.tolerance, chernoff_tolerance(report.d, 1e-4).epsilon, 1e-12);
  ASSERT_EQ(report.records.size(), 3u * 50u * 3u);
  for (std::size_t k = 1; k < report.records.size(); ++k) {
    const auto& a = report.records[k - 1];
    const auto& b = report.records[k];
    EXPECT_LT(std::tie(a.trial, a.vertex, a.radius), std::tie(b.trial, b.vertex, b.radius));
  }
  for (const auto& r : report.records) {
    EXPECT_EQ(r.seed, derive_trial_seed(17, r.trial));
    if (r.radius == 0) {
      EXPECT_EQ(r.sphere_size, 1u);
      EXPECT_EQ(r.rel_error, 0.0);
    }
    EXPECT_NEAR(r.rel_error, static_cast<double>(r.sphere_size) / r.predicted - 1.0, 1e-12);
    if (r.excluded_size) {
      EXPECT_LE(*r.excluded_size, r.sphere_size);
    }
  }
  // Mean sphere sizes over radii never exceed n.
  for (std::size_t t = 0; t < 3; ++t) {
    double total = 0;
    for (const auto& r : report.records)
      if (r.trial == t) total += static_cast<double>(r.sphere_size);
    EXPECT_LE(total / 50.0, 3000.0);
  }
}

TEST(ExpansionReport, SummaryMatchesRecords) {
  const auto report = expansion_report(small_params());
  for (const auto& trial : report.trials) {
    ASSERT_TRUE(trial.connected);
    for (Distance radius = 0; radius <= 2; ++radius) {
      double worst = 0;
      for (const auto& r : report.records)
        if (r.trial == trial.trial && r.radius == radius) worst = std::max(worst, std::abs(r.rel_error));
      EXPECT_DOUBLE_EQ(trial.max_abs_rel_error[radius], worst);
    }
  }
}

TEST(ExpansionReport, WiderToleranceNeverLowersPassCount) {
  auto params = small_params();
  std::size_t previous = 0;
  for (double tol : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    params.tolerance = tol;
    const auto report = expansion_report(params);
    EXPECT_GE(report.trials_within_tolerance[1], previous);
    previous = report.trials_within_tolerance[1];
  }
}

TEST(ExpansionReport, Deterministic) {
  const auto a = expansion_report(small_params());
  const auto b = expansion_report(small_params());
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].vertex, b.records[k].vertex);
    EXPECT_EQ(a.records[k].sphere_size, b.records[k].sphere_size);
  }
}

TEST(ExpansionReport, Errors) {
  ExpansionParams dense;
  dense.n = 1000;
  dense.p = 0.5;
  try {
    expansion_report(dense);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRegimeNotSparse);
  }
  auto too_many = small_params();
  too_many.landmark_count = 1000;
  EXPECT_THROW(expansion_report(too_many), Error);
  auto crowded = small_params();
  crowded.landmark_count = 20;  // 20 * 40^2 > n / 10
  EXPECT_FALSE(expansion_report(crowded).warnings.empty());
}

}  // namespace
}  // namespace metridim
