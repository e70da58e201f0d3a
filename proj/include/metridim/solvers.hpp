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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "metridim/error.hpp"
#include "metridim/graph.hpp"
#include "metridim/parallel.hpp"
#include "metridim/random.hpp"
#include "metridim/resolver.hpp"

namespace metridim {

struct SolveResult {
  std::size_t beta_estimate = 0;
  std::vector<Vertex> witness;  // a resolving set of size beta_estimate
  bool certified = false;       // proven minimum
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Outcome of a heuristic that may fail to find a resolving set.
struct SearchOutcome {
  std::optional<SolveResult> solution;
  /// Last set tried and, on failure, its first unresolved pair.
  std::vector<Vertex> candidate;
  std::optional<VertexPair> collision;
  std::uint64_t attempts = 0;

  bool found() const noexcept { return solution.has_value(); }
};

/// Optional caps for exact_beta. Hitting either returns the best set found
/// so far with certified = false.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

/// Largest n exhaustive_beta accepts by default.
inline constexpr std::size_t kDefaultOracleCap = 12;

namespace detail {

using Clock = std::chrono::steady_clock;

inline void verify_or_throw(const DistanceMatrix& dist, const std::vector<Vertex>& set) {
  if (!is_resolving(dist, set)) throw std::logic_error("solver produced a non-resolving set");
}

inline SolveResult finish(const DistanceMatrix& dist, std::vector<Vertex> set, bool certified,
                          std::uint64_t nodes, Clock::time_point start) {
  std::sort(set.begin(), set.end());
  verify_or_throw(dist, set);
  SolveResult r;
  r.beta_estimate = set.size();
  r.witness = std::move(set);
  r.certified = certified;
  r.nodes_explored = nodes;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

// Advances `comb` to the next k-combination of 0..n-1 in lexicographic order.
inline bool next_combination(std::vector<Vertex>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::size_t gain(std::span<const std::uint64_t> mask, std::span<const std::uint64_t> covered) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) total += std::popcount(mask[w] & ~covered[w]);
  return total;
}

inline std::vector<Vertex> greedy_cover(const PairCoverInstance& inst, std::uint64_t& rounds) {
  const std::size_t n = inst.num_vertices();
  std::vector<std::uint64_t> covered(inst.pair_words(), 0);
  std::size_t remaining = inst.num_pairs();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t g = gain(inst.mask(v), covered);
      if (g > best_gain) {
        best_gain = g;
        best = v;
      }
    }
    // Every pair is covered by its own endpoints, so some vertex gains.
    if (best_gain == 0) throw std::logic_error("greedy stalled on a coverable instance");
    const auto m = inst.mask(best);
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= m[w];
    remaining -= best_gain;
    chosen.push_back(best);
    ++rounds;
  }
  return chosen;
}

class BranchAndBound {
 public:
  BranchAndBound(const PairCoverInstance& inst, const SearchBudget& budget, Clock::time_point start)
      : inst_(inst), budget_(budget), start_(start) {}

  /// Searches for a cover smaller than `incumbent`. Returns false if the
  /// budget ran out before the search space was closed.
  bool run(std::vector<Vertex>& incumbent) {
    best_ = &incumbent;
    std::vector<std::uint64_t> covered(inst_.pair_words(), 0);
    std::vector<std::uint64_t> allowed(inst_.vertex_words(), 0);
    for (std::size_t v = 0; v < inst_.num_vertices(); ++v) allowed[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<Vertex> chosen;
    search(covered, allowed, chosen);
    return !exhausted_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool out_of_budget() {
    if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) exhausted_ = true;
    if (budget_.max_time && (nodes_ & 0x3ff) == 0 && Clock::now() - start_ >= *budget_.max_time) exhausted_ = true;
    return exhausted_;
  }

  void search(const std::vector<std::uint64_t>& covered, std::vector<std::uint64_t> allowed,
              std::vector<Vertex>& chosen) {
    if (exhausted_ || out_of_budget()) return;
    ++nodes_;
    std::size_t uncovered = inst_.num_pairs();
    for (auto w : covered) uncovered -= std::popcount(w);
    if (uncovered == 0) {
      if (chosen.size() < best_->size()) *best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_->size()) return;

    const std::size_t n = inst_.num_vertices();
    std::vector<std::size_t> gains(n, 0);
    std::size_t max_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!((allowed[v / 64] >> (v % 64)) & 1)) continue;
      gains[v] = gain(inst_.mask(v), covered);
      max_gain = std::max(max_gain, gains[v]);
    }
    if (max_gain == 0) return;
    const std::size_t lower = (uncovered + max_gain - 1) / max_gain;
    if (chosen.size() + lower >= best_->size()) return;

    // Branch on the uncovered pair with the fewest remaining coverers.
    std::size_t pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t w = 0; w < covered.size() && fewest > 1; ++w) {
      std::uint64_t open = ~covered[w];
      while (open != 0) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(open));
        open &= open - 1;
        if (k >= inst_.num_pairs()) break;
        const auto cov = inst_.coverers(k);
        std::size_t count = 0;
        for (std::size_t b = 0; b < cov.size(); ++b) count += std::popcount(cov[b] & allowed[b]);
        if (count < fewest) {
          fewest = count;
          pick = k;
          if (count <= 1) break;
        }
      }
    }
    if (fewest == 0) return;

    std::vector<Vertex> candidates;
    const auto cov = inst_.coverers(pick);
    for (Vertex v = 0; v < n; ++v) {
      if (((cov[v / 64] & allowed[v / 64]) >> (v % 64)) & 1) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return gains[a] > gains[b]; });

    std::vector<std::uint64_t> next(covered.size());
    for (Vertex v : candidates) {
      const auto m = inst_.mask(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = covered[w] | m[w];
      allowed[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      chosen.push_back(v);
      search(next, allowed, chosen);
      chosen.pop_back();
      if (exhausted_) return;
    }
  }

  const PairCoverInstance& inst_;
  SearchBudget budget_;
  Clock::time_point start_;
  std::vector<Vertex>* best_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Brute-force oracle: tries subsets by increasing size, lexicographically
/// within a size, and returns the first resolving one.
inline SolveResult exhaustive_beta(const Graph& g, std::size_t max_n = kDefaultOracleCap) {
  const auto start = detail::Clock::now();
  if (g.num_vertices() > max_n) {
    throw Error(ErrorCode::kTooLargeForOracle,
                "exhaustive search limited to n <= " + std::to_string(max_n));
  }
  const auto dist = connected_distances(g);
  const std::size_t n = g.num_vertices();
  std::uint64_t tried = 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Vertex> comb(k);
    std::iota(comb.begin(), comb.end(), Vertex{0});
    do {
      ++tried;
      if (is_resolving(dist, comb)) return detail::finish(dist, comb, true, tried, start);
    } while (detail::next_combination(comb, n));
  }
  throw std::logic_error("no resolving set below n - 1 vertices");
}

/// Greedy set cover over the pair universe: repeatedly take the vertex that
/// distinguishes the most still-unresolved pairs, ties to the smallest id.
inline SolveResult greedy_resolving(const Graph& g, std::size_t max_n = kDefaultPairCoverCap) {
  const auto start = detail::Clock::now();
  const auto dist = connected_distances(g);
  if (g.num_vertices() > max_n) {
    throw Error(ErrorCode::kInstanceTooLarge, "pair cover limited to n <= " + std::to_string(max_n));
  }
  const PairCoverInstance inst(dist);
  std::uint64_t rounds = 0;
  auto chosen = detail::greedy_cover(inst, rounds);
  return detail::finish(dist, std::move(chosen), false, rounds, start);
}

/// Minimum resolving set by branch and bound over the pair-cover instance.
///
/// The greedy cover seeds the incumbent. Each node branches on the uncovered
/// pair with the fewest admissible coverers; the i-th child takes its i-th
/// coverer and forbids the earlier ones, so children are disjoint. Nodes are
/// pruned when |chosen| + ceil(uncovered / best gain) cannot beat the
/// incumbent.
inline SolveResult exact_beta(const Graph& g, const SearchBudget& budget = {},
                              std::size_t max_n = kDefaultPairCoverCap) {
  const auto start = detail::Clock::now();
  const auto dist = connected_distances(g);
  if (g.num_vertices() > max_n) {
    throw Error(ErrorCode::kInstanceTooLarge, "pair cover limited to n <= " + std::to_string(max_n));
  }
  const PairCoverInstance inst(dist);
  std::uint64_t rounds = 0;
  auto best = detail::greedy_cover(inst, rounds);
  if (best.size() == 1) return detail::finish(dist, std::move(best), true, 0, start);
  detail::BranchAndBound bnb(inst, budget, start);
  const bool complete = bnb.run(best);
  return detail::finish(dist, std::move(best), complete, bnb.nodes(), start);
}

namespace detail {

inline void check_set_size(std::size_t n, std::size_t w) {
  if (w < 1 || w > n - 1) {
    throw Error(ErrorCode::kWOutOfRange,
                "set size must lie in [1, " + std::to_string(n - 1) + "], got " + std::to_string(w));
  }
}

}  // namespace detail

/// Draws uniform w-subsets from one engine seeded with `seed` until one
/// resolves, giving up after `max_attempts` draws.
inline SearchOutcome random_resolving(const Graph& g, std::size_t w, std::uint64_t max_attempts,
                                      std::uint64_t seed) {
  const auto start = detail::Clock::now();
  const auto dist = connected_distances(g);
  detail::check_set_size(g.num_vertices(), w);
  Engine rng(seed);
  SearchOutcome out;
  for (std::uint64_t a = 0; a < max_attempts; ++a) {
    out.candidate = sample_subset(rng, g.num_vertices(), w);
    ++out.attempts;
    const auto check = is_resolving(dist, out.candidate);
    if (check) {
      out.collision.reset();
      out.solution = detail::finish(dist, out.candidate, false, out.attempts, start);
      return out;
    }
    out.collision = check.witness;
  }
  return out;
}

/// The k highest-degree vertices, ties to the smallest id.
inline std::vector<Vertex> top_degree_vertices(const Graph& g, std::size_t k) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

inline SearchOutcome topdeg_resolving(const Graph& g, std::size_t k) {
  const auto start = detail::Clock::now();
  require_connected(g);
  if (k < 1 || k > g.num_vertices()) {
    throw Error(ErrorCode::kWOutOfRange, "k must lie in [1, n], got " + std::to_string(k));
  }
  SearchOutcome out;
  out.candidate = top_degree_vertices(g, k);
  out.attempts = 1;
  const auto check = is_resolving(g, out.candidate);
  if (!check) {
    out.collision = check.witness;
    return out;
  }
  SolveResult r;
  r.beta_estimate = out.candidate.size();
  r.witness = out.candidate;
  r.nodes_explored = 1;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(detail::Clock::now() - start);
  out.solution = std::move(r);
  return out;
}

/// Fraction of `trials` uniform w-subsets that resolve g. Trial t draws from
/// Engine(derive_trial_seed(seed, t)), so the value does not depend on how
/// trials are scheduled.
inline double estimate_resolve_probability(const Graph& g, std::size_t w, std::size_t trials,
                                           std::uint64_t seed) {
  const auto dist = connected_distances(g);
  detail::check_set_size(g.num_vertices(), w);
  if (trials == 0) return 0.0;
  std::vector<char> hits(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    Engine rng(derive_trial_seed(seed, t));
    hits[t] = is_resolving(dist, sample_subset(rng, g.num_vertices(), w)).resolving ? 1 : 0;
  });
  const auto count = std::count(hits.begin(), hits.end(), 1);
  return static_cast<double>(count) / static_cast<double>(trials);
}

}  // namespace metridim
