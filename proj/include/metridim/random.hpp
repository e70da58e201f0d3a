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
#include <random>
#include <vector>

#include "metridim/graph.hpp"

namespace metridim {

// All randomness flows through std::mt19937_64, whose output sequence is
// fixed by the C++ standard. The std distributions are not (they differ
// between standard libraries), so the conversions below are our own and
// part of the reproducibility contract. Changing either is a breaking
// change to every seeded output.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for trial `trial_index` of a run with master seed `master`: the
/// (trial_index + 1)-th output of a SplitMix64 generator started at `master`.
/// derive_trial_seed(0, 0) == 0xE220A8397B1DCDAF.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t trial_index) noexcept {
  return mix64(master + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

/// Uniform integer in [0, bound) by multiply-and-reject.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform `k`-subset of 0..n-1 (partial Fisher-Yates), returned sorted.
inline std::vector<Vertex> sample_subset(Engine& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
  for (std::size_t j = 0; j < k; ++j) {
    const auto pick = j + uniform_below(rng, n - j);
    std::swap(pool[j], pool[pick]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace metridim
