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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metridim/error.hpp"
#include "metridim/graph.hpp"

namespace metridim {

using VertexPair = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free copy of a landmark set; validates ids.
inline std::vector<Vertex> normalize_landmarks(std::size_t n, std::span<const Vertex> landmarks) {
  std::vector<Vertex> out(landmarks.begin(), landmarks.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= n) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(out.back()));
  }
  return out;
}

struct LandmarkVector {
  std::vector<Vertex> landmarks;  // ascending vertex id
  std::vector<Distance> coords;   // coords[i] = dist(subject, landmarks[i])
};

inline LandmarkVector distance_vector(const Graph& g, std::span<const Vertex> landmarks, Vertex v) {
  check_vertex(g, v);
  LandmarkVector out{normalize_landmarks(g.num_vertices(), landmarks), {}};
  if (out.landmarks.empty()) throw Error(ErrorCode::kEmptyLandmarkSet, "landmark set is empty");
  require_connected(g);
  // dist(v, r) = dist(r, v): one BFS from the subject covers every landmark.
  const auto row = bfs_distances(g, v);
  for (Vertex r : out.landmarks) out.coords.push_back(row.dist[r]);
  return out;
}

struct ResolveCheck {
  bool resolving = false;
  /// Lexicographically first pair (x < y) with identical distance vectors.
  std::optional<VertexPair> witness;

  explicit operator bool() const noexcept { return resolving; }
};

namespace detail {

// `rows[i]` is the distance row of the i-th landmark. Vertices are sorted by
// (vector, id); inside each tie group the two smallest ids come first, and
// the lexicographically first colliding pair is the smallest such head pair.
inline ResolveCheck check_rows(std::size_t n, std::span<const std::span<const Distance>> rows) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto less = [&](Vertex a, Vertex b) {
    for (const auto& row : rows) {
      if (row[a] != row[b]) return row[a] < row[b];
    }
    return a < b;
  };
  auto same = [&](Vertex a, Vertex b) {
    for (const auto& row : rows) {
      if (row[a] != row[b]) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), less);
  ResolveCheck result{true, std::nullopt};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (same(order[k], order[k + 1]) && (k == 0 || !same(order[k - 1], order[k]))) {
      const VertexPair pair{order[k], order[k + 1]};
      if (!result.witness || pair < *result.witness) result.witness = pair;
      result.resolving = false;
    }
  }
  return result;
}

}  // namespace detail

/// Resolving-set test against a precomputed (connected) distance matrix.
inline ResolveCheck is_resolving(const DistanceMatrix& dist, std::span<const Vertex> landmarks) {
  const auto set = normalize_landmarks(dist.size(), landmarks);
  std::vector<std::span<const Distance>> rows;
  rows.reserve(set.size());
  for (Vertex r : set) rows.push_back(dist.row(r));
  return detail::check_rows(dist.size(), rows);
}

/// Runs one BFS per landmark, so it stays cheap for small R on large graphs.
inline ResolveCheck is_resolving(const Graph& g, std::span<const Vertex> landmarks) {
  const auto set = normalize_landmarks(g.num_vertices(), landmarks);
  require_connected(g);
  std::vector<DistanceRow> bfs;
  bfs.reserve(set.size());
  for (Vertex r : set) bfs.push_back(bfs_distances(g, r));
  std::vector<std::span<const Distance>> rows;
  for (const auto& row : bfs) rows.emplace_back(row.dist);
  return detail::check_rows(g.num_vertices(), rows);
}

/// Position of pair {x, y}, x < y, in the lexicographic pair order.
constexpr std::size_t pair_index(std::size_t n, Vertex x, Vertex y) noexcept {
  return std::size_t{x} * (2 * n - x - 1) / 2 + (y - x - 1);
}

inline bool distinguishes(const DistanceMatrix& dist, Vertex v, Vertex x, Vertex y) {
  return dist(v, x) != dist(v, y);
}

inline bool distinguishes(const Graph& g, Vertex v, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  const auto row = bfs_distances(g, v);
  return row.dist[x] != row.dist[y];
}

/// Largest vertex count a PairCoverInstance accepts unless overridden: masks
/// take C(n,2) * n bits each way, about 8 MiB at n = 512.
inline constexpr std::size_t kDefaultPairCoverCap = 512;

/// Set-cover view of metric dimension. The universe is every unordered pair
/// {x, y} in lexicographic order; vertex v covers the pairs it distinguishes.
/// R resolves G exactly when the masks of R cover the universe.
class PairCoverInstance {
 public:
  using Block = std::uint64_t;

  explicit PairCoverInstance(const DistanceMatrix& dist) : n_(dist.size()) {
    num_pairs_ = n_ * (n_ - 1) / 2;
    pair_words_ = (num_pairs_ + 63) / 64;
    vertex_words_ = (n_ + 63) / 64;
    masks_.assign(n_ * pair_words_, 0);
    coverers_.assign(num_pairs_ * vertex_words_, 0);
    mask_sizes_.assign(n_, 0);
    pairs_.reserve(num_pairs_);
    for (Vertex x = 0; x + 1 < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y) pairs_.emplace_back(x, y);
    }
    for (Vertex v = 0; v < n_; ++v) {
      const auto row = dist.row(v);
      Block* mask = masks_.data() + std::size_t{v} * pair_words_;
      for (std::size_t k = 0; k < num_pairs_; ++k) {
        if (row[pairs_[k].first] != row[pairs_[k].second]) {
          mask[k / 64] |= Block{1} << (k % 64);
          coverers_[k * vertex_words_ + v / 64] |= Block{1} << (v % 64);
          ++mask_sizes_[v];
        }
      }
    }
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_pairs() const noexcept { return num_pairs_; }
  std::size_t pair_words() const noexcept { return pair_words_; }
  std::size_t vertex_words() const noexcept { return vertex_words_; }

  VertexPair pair_at(std::size_t k) const { return pairs_[k]; }
  std::span<const VertexPair> pairs() const noexcept { return pairs_; }

  std::span<const Block> mask(Vertex v) const {
    return {masks_.data() + std::size_t{v} * pair_words_, pair_words_};
  }
  std::size_t mask_size(Vertex v) const { return mask_sizes_[v]; }

  /// Vertices distinguishing pair k, as an n-bit set.
  std::span<const Block> coverers(std::size_t k) const {
    return {coverers_.data() + k * vertex_words_, vertex_words_};
  }

  bool contains(Vertex v, std::size_t k) const { return (mask(v)[k / 64] >> (k % 64)) & 1; }

  bool distinguishes(Vertex v, Vertex x, Vertex y) const {
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    return contains(v, pair_index(n_, x, y));
  }

  /// Sorted list of pairs in mask(v).
  std::vector<VertexPair> mask_pairs(Vertex v) const {
    std::vector<VertexPair> out;
    for (std::size_t k = 0; k < num_pairs_; ++k) {
      if (contains(v, k)) out.push_back(pairs_[k]);
    }
    return out;
  }

  /// First pair left uncovered by the masks of `landmarks`, if any.
  std::optional<VertexPair> first_uncovered(std::span<const Vertex> landmarks) const {
    std::vector<Block> covered(pair_words_, 0);
    for (Vertex v : landmarks) {
      const auto m = mask(v);
      for (std::size_t w = 0; w < pair_words_; ++w) covered[w] |= m[w];
    }
    for (std::size_t w = 0; w < pair_words_; ++w) {
      Block missing = ~covered[w];
      if (w + 1 == pair_words_ && num_pairs_ % 64 != 0) missing &= (Block{1} << (num_pairs_ % 64)) - 1;
      if (missing != 0) return pairs_[w * 64 + static_cast<std::size_t>(std::countr_zero(missing))];
    }
    return std::nullopt;
  }

  bool covers(std::span<const Vertex> landmarks) const { return !first_uncovered(landmarks); }

 private:
  std::size_t n_ = 0;
  std::size_t num_pairs_ = 0;
  std::size_t pair_words_ = 0;
  std::size_t vertex_words_ = 0;
  std::vector<Block> masks_;
  std::vector<Block> coverers_;
  std::vector<std::size_t> mask_sizes_;
  std::vector<VertexPair> pairs_;
};

inline PairCoverInstance build_pair_cover(const Graph& g, std::size_t max_vertices = kDefaultPairCoverCap) {
  if (g.num_vertices() > max_vertices) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "pair cover limited to n <= " + std::to_string(max_vertices) + ", got " +
                    std::to_string(g.num_vertices()));
  }
  return PairCoverInstance(connected_distances(g));
}

}  // namespace metridim
