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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "metridim/error.hpp"
#include "metridim/graph.hpp"
#include "metridim/random.hpp"

namespace metridim {

struct GnpParams {
  std::size_t n = 2;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Erdos-Renyi G(n, p). One engine draw per unordered pair, pairs visited in
/// lexicographic order (0,1), (0,2), ..., (n-2,n-1); the pair becomes an edge
/// iff uniform01(draw) < p. The seed therefore fixes the graph on every
/// platform.
inline Graph gnp(const GnpParams& params) {
  if (params.n < 2) throw Error(ErrorCode::kNTooSmall, "gnp needs n >= 2");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "edge probability must lie in [0, 1]");
  }
  Engine rng(params.seed);
  const std::size_t n = params.n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.05) + 16);
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform01(rng) < params.p) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kNTooSmall, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return build_graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);
  }
  return build_graph(10, edges);
}

}  // namespace metridim
