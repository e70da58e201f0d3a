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

#include <sstream>

#include <gtest/gtest.h>

#include "metridim.hpp"
#include "test_graphs.hpp"

namespace metridim {
namespace {

std::vector<Distance> row(std::initializer_list<Distance> values) { return values; }

TEST(BuildGraph, PathFromEdges) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraph, DuplicatesCollapse) {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g, build_graph(3, {{0, 1}, {1, 2}}));
}

TEST(BuildGraph, Errors) {
  try {
    build_graph(2, {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfLoop);
  }
  try {
    build_graph(3, {{0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexOutOfRange);
  }
  try {
    build_graph(1, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNTooSmall);
  }
}

TEST(BuildGraph, NeighborListsSortedAndSymmetric) {
  const Graph g = build_graph(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}, {2, 4}});
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 5; ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) EXPECT_TRUE(g.has_edge(w, v));
    degree_sum += nb.size();
  }
  EXPECT_EQ(degree_sum, 2 * g.num_edges());
}

TEST(Bfs, Examples) {
  EXPECT_EQ(bfs_distances(path_graph(3), 0).dist, row({0, 1, 2}));
  EXPECT_EQ(bfs_distances(cycle_graph(4), 0).dist, row({0, 1, 2, 1}));
  EXPECT_EQ(bfs_distances(build_graph(2, {}), 0).dist, row({0, kUnreachable}));
  EXPECT_THROW(bfs_distances(path_graph(3), 3), Error);
}

TEST(AllPairs, Examples) {
  const auto k3 = all_pairs_distances(complete_graph(3));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(k3(u, v), u == v ? 0u : 1u);
  EXPECT_EQ(all_pairs_distances(path_graph(3)).max_entry(), 2u);
  EXPECT_EQ(all_pairs_distances(cycle_graph(5)).max_entry(), 2u);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  EXPECT_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(complete_graph(2)));
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(complete_graph(6)), 1u);
  EXPECT_EQ(diameter(path_graph(7)), 6u);
  EXPECT_EQ(diameter(cycle_graph(8)), 4u);
  try {
    diameter(build_graph(4, {{0, 1}, {2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

// The direction-optimizing BFS switches modes on dense graphs, so compare it
// against Floyd-Warshall over a range of densities, including disconnected
// samples.
TEST(DistanceProperties, MatchesFloydWarshall) {
  for (double p : {0.05, 0.15, 0.3, 0.6, 0.9}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Graph g = gnp({30, p, derive_trial_seed(77, s)});
      const auto expect = testing::floyd_warshall(g);
      const auto got = all_pairs_distances(g);
      for (Vertex u = 0; u < 30; ++u)
        for (Vertex v = 0; v < 30; ++v) ASSERT_EQ(got(u, v), expect[u][v]) << "p=" << p << " seed " << s;
    }
  }
}

TEST(DistanceProperties, MetricAxioms) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = gnp({25, 0.2, derive_trial_seed(5, s)});
    if (!is_connected(g)) continue;
    const auto d = all_pairs_distances(g);
    const std::size_t n = g.num_vertices();
    Distance max_seen = 0;
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0u);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), d(v, u));
        if (u != v) {
          EXPECT_GE(d(u, v), 1u);
        }
        max_seen = std::max(max_seen, d(u, v));
        for (Vertex w = 0; w < n; ++w) EXPECT_LE(d(u, w), d(u, v) + d(v, w));
      }
      // Edge-Lipschitz: adjacent rows differ by at most one everywhere.
      for (Vertex v : g.neighbors(u)) {
        for (Vertex w = 0; w < n; ++w) {
          const auto a = d(u, w), b = d(v, w);
          EXPECT_LE(a > b ? a - b : b - a, 1u);
        }
      }
    }
    EXPECT_EQ(diameter(g), max_seen);
  }
}

TEST(EdgeList, ParsesCommentsAndHeader) {
  std::istringstream in("# a path\n\nn 4\n0 1\n  # indented comment\n1 2\n2 1\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_FALSE(is_connected(g));  // vertex 3 is isolated
}

TEST(EdgeList, RoundTripIsCanonical) {
  const Graph g = gnp({40, 0.2, 9});
  std::istringstream in(to_edge_list(g));
  const Graph back = read_edge_list(in);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_edge_list(back), to_edge_list(g));
}

TEST(EdgeList, Rejects) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  auto code_of = [&](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kDomainError;  // sentinel: nothing thrown
  };
  EXPECT_EQ(code_of("0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of(""), ErrorCode::kParse);
  EXPECT_EQ(code_of("n 3\n0 x\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("n 3\n0 1 2\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("n 3\n0 -1\n"), ErrorCode::kParse);
  EXPECT_EQ(code_of("n 3\n0 3\n"), ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(code_of("n 3\n1 1\n"), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of("n 1\n"), ErrorCode::kNTooSmall);
}

}  // namespace
}  // namespace metridim
