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
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "metridim/csv.hpp"
#include "metridim/error.hpp"
#include "metridim/generators.hpp"
#include "metridim/graph.hpp"
#include "metridim/parallel.hpp"
#include "metridim/random.hpp"
#include "metridim/solvers.hpp"
#include "metridim/theory.hpp"

namespace metridim {

/// One sampled graph of a sweep; p = n^(x-1).
struct SweepRecord {
  std::size_t n = 0;
  double x = 0.0;
  double p = 0.0;
  double d = 0.0;
  unsigned i = 0;
  double c = 0.0;
  double q = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  long long beta_greedy = -1;  // -1: not run
  long long beta_random = -1;  // -1: not run or nothing found
  long long w_used = -1;
  long long diameter_empirical = -1;
  long long diameter_predicted = -1;  // -1: ambiguous or undefined
  double runtime_ms = 0.0;
};

/// A grid cell that produced no record, with the reason.
struct SweepSkip {
  double x = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

struct SweepParams {
  std::size_t n = 0;
  std::vector<double> x_grid;
  std::size_t trials = 1;
  bool run_greedy = true;
  bool run_random = false;
  std::uint64_t master_seed = 0;
  double epsilon = 0.5;           // random-set size (2 + epsilon) ln n / ln(1/q)
  std::uint64_t max_attempts = 20;
  /// Wall-clock timings make the CSV nondeterministic, so they are opt-in;
  /// otherwise runtime_ms is written as 0.
  bool record_timings = false;
};

struct SweepPointSummary {
  double x = 0.0;
  std::size_t records = 0;
  double mean_log_beta_greedy = 0.0;  // mean of ln(beta) / ln(n)
  double zigzag_prediction = 0.0;     // 1 - x floor(1/x)
};

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by (x, trial)
  std::vector<SweepSkip> skipped;
  std::vector<SweepPointSummary> summary;
};

inline constexpr const char* kSweepCsvHeader =
    "n,x,p,d,i,c,q,trial,seed,beta_greedy,beta_random,w_used,diameter_empirical,diameter_predicted,runtime_ms";

/// Parses "start:stop:step" into start, start + step, ... <= stop. Values are
/// rounded to 12 decimals so 0.55:0.95:0.1 yields 0.65 rather than
/// 0.6500000000000001. Every value must lie in (0, 1].
inline std::vector<double> parse_x_grid(const std::string& spec) {
  std::istringstream in(spec);
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  const bool parsed = static_cast<bool>(in >> start >> c1 >> stop >> c2 >> step) && c1 == ':' && c2 == ':';
  if (!parsed || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::kDomainError, "grid must look like start:stop:step, got '" + spec + "'");
  }
  if (!(step > 0.0) || stop < start) throw Error(ErrorCode::kDomainError, "grid needs step > 0 and start <= stop");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  for (std::size_t k = 0; k < count; ++k) {
    const double x = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
    if (!(x > 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kDomainError, "grid value " + format_double(x) + " outside (0, 1]");
    }
    grid.push_back(x);
  }
  return grid;
}

namespace detail {

inline std::optional<SweepRecord> sweep_cell(const SweepParams& params, double x, std::size_t trial,
                                             std::uint64_t seed, std::string& why) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.n = params.n;
  rec.x = x;
  rec.p = std::pow(static_cast<double>(params.n), x - 1.0);
  rec.trial = trial;
  rec.seed = seed;
  const Regime regime = compute_regime(params.n, rec.p);
  rec.d = regime.d;
  rec.i = regime.i;
  rec.c = regime.c;
  rec.q = regime.q;
  const Graph g = gnp({params.n, rec.p, seed});
  if (!is_connected(g)) {
    why = "disconnected sample";
    return std::nullopt;
  }
  if (params.run_greedy) rec.beta_greedy = static_cast<long long>(greedy_resolving(g).beta_estimate);
  if (params.run_random) {
    const auto w = std::clamp<std::size_t>(random_set_size(regime, params.epsilon), 1, params.n - 1);
    rec.w_used = static_cast<long long>(w);
    const auto found = random_resolving(g, w, params.max_attempts, derive_trial_seed(seed, 1));
    if (found.found()) rec.beta_random = static_cast<long long>(found.solution->beta_estimate);
  }
  rec.diameter_empirical = diameter(g);
  try {
    const auto pred = predict_diameter(params.n, rec.p, 0.0);
    if (!pred.ambiguous) rec.diameter_predicted = pred.diameter;
  } catch (const Error&) {
  }
  if (params.record_timings) {
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace detail

/// Runs every (x, trial) cell. Cell (k, t) uses the graph seed
/// derive_trial_seed(master_seed, k * trials + t), and its random-set search
/// draws from derive_trial_seed(graph seed, 1). Failed or disconnected cells
/// land in `skipped`; the rest of the sweep is unaffected.
inline SweepResult run_sweep(const SweepParams& params) {
  if (params.n < 2) throw Error(ErrorCode::kNTooSmall, "sweep needs n >= 2");
  if (params.trials < 1) throw Error(ErrorCode::kDomainError, "trials must be positive");
  for (double x : params.x_grid) {
    if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorCode::kDomainError, "grid value outside (0, 1]");
  }
  const std::size_t cells = params.x_grid.size() * params.trials;
  std::vector<std::optional<SweepRecord>> rows(cells);
  std::vector<std::string> reasons(cells);
  parallel_for(cells, [&](std::size_t cell) {
    const double x = params.x_grid[cell / params.trials];
    const std::size_t trial = cell % params.trials;
    try {
      rows[cell] = detail::sweep_cell(params, x, trial, derive_trial_seed(params.master_seed, cell), reasons[cell]);
    } catch (const std::exception& e) {
      reasons[cell] = e.what();
    }
  });

  SweepResult result;
  for (std::size_t k = 0; k < params.x_grid.size(); ++k) {
    SweepPointSummary point{params.x_grid[k], 0, 0.0, zigzag_f(params.x_grid[k])};
    for (std::size_t t = 0; t < params.trials; ++t) {
      const std::size_t cell = k * params.trials + t;
      if (!rows[cell]) {
        result.skipped.push_back({params.x_grid[k], t, derive_trial_seed(params.master_seed, cell), reasons[cell]});
        continue;
      }
      const auto& rec = *rows[cell];
      if (rec.beta_greedy >= 1) {
        ++point.records;
        point.mean_log_beta_greedy += std::log(static_cast<double>(rec.beta_greedy)) / std::log(static_cast<double>(params.n));
      }
      result.records.push_back(rec);
    }
    if (point.records > 0) point.mean_log_beta_greedy /= static_cast<double>(point.records);
    result.summary.push_back(point);
  }
  return result;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.x) << ',' << format_double(r.p) << ',' << format_double(r.d) << ','
        << r.i << ',' << format_double(r.c) << ',' << format_double(r.q) << ',' << r.trial << ',' << r.seed << ','
        << r.beta_greedy << ',' << r.beta_random << ',' << r.w_used << ',' << r.diameter_empirical << ','
        << r.diameter_predicted << ',' << format_double(r.runtime_ms) << '\n';
  }
}

}  // namespace metridim
