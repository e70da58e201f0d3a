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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metridim/error.hpp"

namespace metridim {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Marks a vertex that BFS never reached. Never valid as a hop count.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
/// sorted neighbor lists.
class Graph {
 public:
  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

inline void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
  }
}

/// Builds a graph from an arbitrary edge list. Duplicates (in either
/// orientation) collapse; self-loops are rejected.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "graph needs n >= 2, got " + std::to_string(n));
  if (n > std::numeric_limits<Vertex>::max() - 1) {
    throw Error(ErrorCode::kVertexOutOfRange, "n exceeds 32-bit vertex ids");
  }
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(u));
    if (v >= n) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
    if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

struct DistanceRow {
  Vertex source = 0;
  std::vector<Distance> dist;
};

namespace detail {

// Direction-optimizing BFS: top-down while the frontier is light, bottom-up
// (each unvisited vertex looks for a parent on the current level) once the
// frontier's edges outweigh the unexplored ones. Both directions produce the
// same hop counts. Stops after `max_radius` levels.
inline void bfs_into(const Graph& g, Vertex source, std::vector<Distance>& dist,
                     std::vector<Vertex>& frontier, std::vector<Vertex>& next,
                     Distance max_radius = kUnreachable) {
  constexpr std::size_t kAlpha = 14;
  const std::size_t n = g.num_vertices();
  dist.assign(n, kUnreachable);
  frontier.clear();
  dist[source] = 0;
  frontier.push_back(source);
  std::size_t unexplored_edges = 2 * g.num_edges() - g.degree(source);
  for (Distance level = 0; !frontier.empty() && level < max_radius; ++level) {
    std::size_t frontier_edges = 0;
    for (Vertex u : frontier) frontier_edges += g.degree(u);
    next.clear();
    if (frontier_edges * kAlpha > unexplored_edges) {
      for (Vertex u = 0; u < n; ++u) {
        if (dist[u] != kUnreachable) continue;
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] == level) {
            dist[u] = level + 1;
            next.push_back(u);
            break;
          }
        }
      }
    } else {
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] == kUnreachable) {
            dist[w] = level + 1;
            next.push_back(w);
          }
        }
      }
    }
    for (Vertex w : next) unexplored_edges -= g.degree(w);
    frontier.swap(next);
  }
}

}  // namespace detail

/// Exact hop distances from `source`; unreachable vertices hold kUnreachable.
inline DistanceRow bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  DistanceRow row{source, {}};
  std::vector<Vertex> frontier, next;
  detail::bfs_into(g, source, row.dist, frontier, next);
  return row;
}

/// Row-major n x n hop-count matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return data_[std::size_t{u} * n_ + v]; }
  std::span<const Distance> row(Vertex u) const { return {data_.data() + std::size_t{u} * n_, n_}; }
  std::span<Distance> row(Vertex u) { return {data_.data() + std::size_t{u} * n_, n_}; }

  Distance max_entry() const {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix m(n);
  std::vector<Distance> dist;
  std::vector<Vertex> frontier, next;
  for (Vertex s = 0; s < n; ++s) {
    detail::bfs_into(g, s, dist, frontier, next);
    std::copy(dist.begin(), dist.end(), m.row(s).begin());
  }
  return m;
}

inline bool is_connected(const Graph& g) {
  std::vector<Distance> dist;
  std::vector<Vertex> frontier, next;
  detail::bfs_into(g, 0, dist, frontier, next);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

/// Connected-only distance matrix; consumers never see kUnreachable.
inline DistanceMatrix connected_distances(const Graph& g) {
  require_connected(g);
  return all_pairs_distances(g);
}

inline Distance diameter(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Distance> dist;
  std::vector<Vertex> frontier, next;
  Distance best = 0;
  for (Vertex s = 0; s < n; ++s) {
    detail::bfs_into(g, s, dist, frontier, next);
    const Distance ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc == kUnreachable) throw Error(ErrorCode::kDisconnected, "graph is not connected");
    best = std::max(best, ecc);
  }
  return best;
}

}  // namespace metridim
