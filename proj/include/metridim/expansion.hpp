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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metridim/error.hpp"
#include "metridim/generators.hpp"
#include "metridim/graph.hpp"
#include "metridim/parallel.hpp"
#include "metridim/random.hpp"
#include "metridim/resolver.hpp"
#include "metridim/theory.hpp"

namespace metridim {

namespace detail {

inline std::vector<std::size_t> layer_counts(std::span<const Distance> dist, Distance max_radius) {
  std::vector<std::size_t> counts(std::size_t{max_radius} + 1, 0);
  for (Distance d : dist) {
    if (d <= max_radius) ++counts[d];
  }
  return counts;
}

// Hop distance to the nearest source, explored up to `max_radius`.
inline std::vector<Distance> multi_source_bfs(const Graph& g, std::span<const Vertex> sources,
                                              Distance max_radius) {
  std::vector<Distance> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> frontier, next;
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  for (Distance level = 0; level < max_radius && !frontier.empty(); ++level) {
    next.clear();
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = level + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

inline std::size_t excluded_sphere(const Graph& g, std::span<const Distance> from_x,
                                   std::span<const Vertex> landmarks, Distance radius) {
  const auto from_r = multi_source_bfs(g, landmarks, radius);
  std::size_t count = 0;
  for (std::size_t v = 0; v < from_x.size(); ++v) {
    if (from_x[v] == radius && from_r[v] == kUnreachable) ++count;
  }
  return count;
}

}  // namespace detail

/// |S(v,0)|, ..., |S(v,max_radius)|; radii past the eccentricity count 0.
inline std::vector<std::size_t> sphere_sizes(const Graph& g, Vertex v, Distance max_radius) {
  check_vertex(g, v);
  require_connected(g);
  std::vector<Distance> dist;
  std::vector<Vertex> frontier, next;
  detail::bfs_into(g, v, dist, frontier, next, max_radius);
  return detail::layer_counts(dist, max_radius);
}

/// |S(x,i) \ N(R,i)|: vertices at distance exactly i from x that are farther
/// than i from every landmark.
inline std::size_t sphere_excluding_landmarks(const Graph& g, Vertex x, std::span<const Vertex> landmarks,
                                              Distance radius) {
  check_vertex(g, x);
  const auto set = normalize_landmarks(g.num_vertices(), landmarks);
  if (std::binary_search(set.begin(), set.end(), x)) {
    throw Error(ErrorCode::kXInR, "vertex " + std::to_string(x) + " is a landmark");
  }
  require_connected(g);
  std::vector<Distance> dist;
  std::vector<Vertex> frontier, next;
  detail::bfs_into(g, x, dist, frontier, next, radius);
  return detail::excluded_sphere(g, dist, set, radius);
}

struct ExpansionRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // graph seed of this trial
  Vertex vertex = 0;
  Distance radius = 0;
  std::size_t sphere_size = 0;
  double predicted = 0.0;  // d^radius
  double rel_error = 0.0;  // sphere_size / predicted - 1
  /// |S(x,i) \ N(R,i)| when landmarks were drawn and x is not one of them.
  std::optional<std::size_t> excluded_size;
};

struct ExpansionParams {
  std::size_t n = 0;
  double p = 0.0;
  Distance max_radius = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t landmark_count = 0;
  std::size_t sample_count = 200;
  /// Allowed |rel_error|; defaults to chernoff_tolerance(d, 1e-4).
  std::optional<double> tolerance;
};

struct ExpansionTrialSummary {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool connected = true;
  std::vector<double> max_abs_rel_error;  // per radius, over sampled vertices
  std::vector<double> set_rel_error;      // per radius: sum |S(v,i)| / (|V'| d^i) - 1
};

struct ExpansionReport {
  double d = 0.0;
  double tolerance = 0.0;
  std::vector<ExpansionRecord> records;  // sorted by (trial, vertex, radius)
  std::vector<ExpansionTrialSummary> trials;
  std::vector<double> max_abs_rel_error;            // per radius, over connected trials
  std::vector<std::size_t> trials_within_tolerance;  // per radius
  std::vector<std::string> warnings;
};

/// Largest landmark set the concentration estimate covers: (ln n)^2 / ln ln n.
inline double max_landmark_count(std::size_t n) {
  const double log_n = std::log(static_cast<double>(n));
  return log_n * log_n / std::log(log_n);
}

/// Samples G(n, p) per trial and measures sphere sizes around uniformly
/// sampled vertices against d^radius.
///
/// Trial t builds its graph from derive_trial_seed(seed, t) and draws its
/// landmarks, then its sampled vertices, from an engine seeded with
/// derive_trial_seed(graph_seed, 0). Disconnected trial graphs are kept in
/// the summary with connected = false and contribute no records.
inline ExpansionReport expansion_report(const ExpansionParams& params) {
  const Regime regime = compute_regime(params.n, params.p);
  if (regime.dense) throw Error(ErrorCode::kRegimeNotSparse, "expansion needs d <= n / ln n");
  if (params.trials == 0) throw Error(ErrorCode::kDomainError, "trials must be positive");
  if (static_cast<double>(params.landmark_count) > max_landmark_count(params.n)) {
    throw Error(ErrorCode::kDomainError, "landmark count exceeds (ln n)^2 / ln ln n");
  }
  if (params.landmark_count >= params.n) throw Error(ErrorCode::kDomainError, "too many landmarks");

  ExpansionReport report;
  report.d = regime.d;
  report.tolerance = params.tolerance.value_or(chernoff_tolerance(regime.d, 1e-4).epsilon);
  const std::size_t radii = std::size_t{params.max_radius} + 1;
  const double nn = static_cast<double>(params.n);
  if (params.landmark_count > 0 &&
      static_cast<double>(params.landmark_count) * std::pow(regime.d, params.max_radius) > nn / 10.0) {
    report.warnings.push_back("landmark count * d^radius exceeds n/10; exclusion estimates are crude");
  }

  std::vector<std::vector<ExpansionRecord>> per_trial(params.trials);
  report.trials.resize(params.trials);
  parallel_for(params.trials, [&](std::size_t t) {
    auto& summary = report.trials[t];
    summary.trial = t;
    summary.seed = derive_trial_seed(params.seed, t);
    const Graph g = gnp({params.n, params.p, summary.seed});
    if (!is_connected(g)) {
      summary.connected = false;
      return;
    }
    Engine rng(derive_trial_seed(summary.seed, 0));
    const auto landmarks = sample_subset(rng, params.n, params.landmark_count);
    const auto sampled = sample_subset(rng, params.n, std::min(params.n, params.sample_count));

    summary.max_abs_rel_error.assign(radii, 0.0);
    std::vector<double> totals(radii, 0.0);
    std::vector<Distance> dist;
    std::vector<Vertex> frontier, next;
    auto& rows = per_trial[t];
    rows.reserve(sampled.size() * radii);
    for (Vertex v : sampled) {
      detail::bfs_into(g, v, dist, frontier, next, params.max_radius);
      const auto counts = detail::layer_counts(dist, params.max_radius);
      const bool is_landmark = std::binary_search(landmarks.begin(), landmarks.end(), v);
      for (Distance r = 0; r <= params.max_radius; ++r) {
        ExpansionRecord rec;
        rec.trial = t;
        rec.seed = summary.seed;
        rec.vertex = v;
        rec.radius = r;
        rec.sphere_size = counts[r];
        rec.predicted = std::pow(regime.d, r);
        rec.rel_error = static_cast<double>(rec.sphere_size) / rec.predicted - 1.0;
        if (!landmarks.empty() && !is_landmark && r > 0) {
          rec.excluded_size = detail::excluded_sphere(g, dist, landmarks, r);
        }
        summary.max_abs_rel_error[r] = std::max(summary.max_abs_rel_error[r], std::abs(rec.rel_error));
        totals[r] += static_cast<double>(rec.sphere_size);
        rows.push_back(rec);
      }
    }
    summary.set_rel_error.resize(radii);
    for (Distance r = 0; r <= params.max_radius; ++r) {
      summary.set_rel_error[r] =
          totals[r] / (static_cast<double>(sampled.size()) * std::pow(regime.d, r)) - 1.0;
    }
  });

  report.max_abs_rel_error.assign(radii, 0.0);
  report.trials_within_tolerance.assign(radii, 0);
  for (std::size_t t = 0; t < params.trials; ++t) {
    const auto& summary = report.trials[t];
    if (!summary.connected) continue;
    for (std::size_t r = 0; r < radii; ++r) {
      report.max_abs_rel_error[r] = std::max(report.max_abs_rel_error[r], summary.max_abs_rel_error[r]);
      if (summary.max_abs_rel_error[r] <= report.tolerance) ++report.trials_within_tolerance[r];
    }
    report.records.insert(report.records.end(), per_trial[t].begin(), per_trial[t].end());
  }
  return report;
}

}  // namespace metridim
