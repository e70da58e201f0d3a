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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metridim/error.hpp"

// Closed-form predictions for the metric dimension of G(n, p). All logarithms
// are natural.

namespace metridim {

struct Regime {
  std::size_t n = 0;
  double p = 0.0;
  double d = 0.0;    // expected degree p(n-1)
  unsigned i = 0;    // largest j with d^j <= n / ln n (0 when dense)
  double c = 0.0;    // d^(i+1) / n
  double q = 0.0;    // probability that one landmark fails to separate a random pair
  double log_inv_q = 0.0;  // ln(1/q), accurate even when q rounds to 1
  double eta = 0.0;  // ln(d^i) / ln n
  bool dense = false;
};

/// q for a dense regime: both endpoints adjacent or both non-adjacent.
inline double dense_q(double p) { return p * p + (1.0 - p) * (1.0 - p); }

/// q for a sparse regime, written as e^{-2c} + (1 - e^{-c})^2.
inline double sparse_q(double c) {
  const double e = std::exp(-c);
  return std::exp(-2.0 * c) + (1.0 - e) * (1.0 - e);
}

/// ln(1/q) for the sparse q, using q = 1 - 2e^{-c}(1 - e^{-c}).
inline double sparse_log_inv_q(double c) {
  const double e = std::exp(-c);
  return -std::log1p(-2.0 * e * (1.0 - e));
}

namespace detail {

inline void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kDegenerateP, "p must lie strictly between 0 and 1");
  }
}

}  // namespace detail

/// d^i = o(n) is read at finite n as d^i <= n / ln n; the regime is dense when
/// d itself exceeds that threshold.
inline Regime compute_regime(std::size_t n, double p) {
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "regime needs n >= 2");
  detail::check_probability(p);
  Regime r;
  r.n = n;
  r.p = p;
  const double nn = static_cast<double>(n);
  const double log_n = std::log(nn);
  r.d = p * (nn - 1.0);
  const double threshold = nn / log_n;
  r.dense = r.d > threshold;
  if (r.dense) {
    r.i = 0;
    r.c = r.d / nn;
    r.q = dense_q(p);
    r.log_inv_q = -std::log1p(-2.0 * p * (1.0 - p));
    r.eta = 0.0;
    return r;
  }
  if (r.d <= 1.0) {
    throw Error(ErrorCode::kDomainError, "expected degree must exceed 1 for a sparse regime");
  }
  double power = 1.0;  // d^i
  while (power * r.d <= threshold) {
    power *= r.d;
    ++r.i;
  }
  r.c = power * r.d / nn;
  r.q = sparse_q(r.c);
  r.log_inv_q = sparse_log_inv_q(r.c);
  r.eta = std::log(power) / log_n;
  return r;
}

enum class BetaCase { kI, kII, kIII };

constexpr std::string_view to_string(BetaCase c) {
  switch (c) {
    case BetaCase::kI: return "i";
    case BetaCase::kII: return "ii";
    case BetaCase::kIII: return "iii";
  }
  return "?";
}

struct BetaEstimate {
  BetaCase label = BetaCase::kI;
  double lower = 0.0;
  double upper = 0.0;
};

struct DiameterPrediction {
  unsigned diameter = 0;
  /// The lower threshold condition fails at this margin too.
  bool ambiguous = false;
};

struct Prediction {
  BetaCase label = BetaCase::kI;
  double beta_lower = 0.0;
  double beta_upper = 0.0;
  std::size_t subthreshold_size = 0;
  std::optional<DiameterPrediction> predicted_diameter;
  /// Both case formulas, filled only when c lies in [C0/2, 2 C0].
  std::vector<BetaEstimate> alternatives;
};

struct PredictConfig {
  double case_threshold = 10.0;  // C0: case (i) while c <= C0
  double epsilon = 0.5;          // for the sub-threshold set size
  double diameter_margin = 0.0;
};

/// 2 ln n / ln(1/q): the value shared by cases (i) and (ii).
inline double collision_beta(std::size_t n, double q) {
  return 2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / q);
}

/// Case (iii) bounds: eta * L and L with L = (d^i/n + e^{-c})^{-1} ln n.
inline BetaEstimate sparse_layer_bounds(const Regime& r) {
  const double nn = static_cast<double>(r.n);
  const double layer = std::pow(r.d, static_cast<double>(r.i)) / nn + std::exp(-r.c);
  const double upper = std::log(nn) / layer;
  return {BetaCase::kIII, r.eta * upper, upper};
}

inline DiameterPrediction predict_diameter(std::size_t n, double p, double margin = 0.0) {
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "diameter prediction needs n >= 2");
  detail::check_probability(p);
  if (!(margin >= 0.0)) throw Error(ErrorCode::kDomainError, "margin must be non-negative");
  const double nn = static_cast<double>(n);
  const double d = p * (nn - 1.0);
  if (d < 2.0) throw Error(ErrorCode::kDomainError, "expected degree must be at least 2");
  const double target = 2.0 * std::log(nn);
  DiameterPrediction out;
  double prev = 1.0 / nn;  // d^(D-1) / n
  double cur = d / nn;     // d^D / n
  out.diameter = 1;
  while (cur < target * (1.0 + margin)) {
    prev = cur;
    cur *= d;
    ++out.diameter;
  }
  out.ambiguous = prev > target * (1.0 - margin);
  return out;
}

/// floor((2 - epsilon) ln n / ln(1/q)): sets this small are not expected to
/// resolve. Zero flags the degenerate epsilon -> 2 end.
inline std::size_t subthreshold_set_size(std::size_t n, double q, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw Error(ErrorCode::kDomainError, "epsilon must lie in (0, 2)");
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::kDomainError, "q must lie in (0, 1)");
  return static_cast<std::size_t>(std::floor((2.0 - epsilon) * std::log(static_cast<double>(n)) / std::log(1.0 / q)));
}

inline std::size_t subthreshold_set_size(const Regime& r, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw Error(ErrorCode::kDomainError, "epsilon must lie in (0, 2)");
  return static_cast<std::size_t>(std::floor((2.0 - epsilon) * std::log(static_cast<double>(r.n)) / r.log_inv_q));
}

/// ceil((2 + epsilon) ln n / ln(1/q)): a uniform set this large resolves with
/// probability bounded away from zero.
inline std::size_t random_set_size(std::size_t n, double q, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kDomainError, "epsilon must be positive");
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::kDomainError, "q must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil((2.0 + epsilon) * std::log(static_cast<double>(n)) / std::log(1.0 / q)));
}

inline std::size_t random_set_size(const Regime& r, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kDomainError, "epsilon must be positive");
  return static_cast<std::size_t>(std::ceil((2.0 + epsilon) * std::log(static_cast<double>(r.n)) / r.log_inv_q));
}

/// Size of the highest-degree landmark set for G(n, 1/2): ceil(3 ln n / ln 2).
inline std::size_t top_degree_set_size(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(3.0 * std::log(static_cast<double>(n)) / std::log(2.0)));
}

inline Prediction predict_beta(const Regime& r, const PredictConfig& config = {}) {
  Prediction out;
  const double log_n = std::log(static_cast<double>(r.n));
  const double log_log_n = std::log(log_n);
  const double collision_value = 2.0 * std::log(static_cast<double>(r.n)) / r.log_inv_q;
  const BetaEstimate collision{BetaCase::kI, collision_value, collision_value};
  BetaEstimate chosen = collision;
  if (r.c <= config.case_threshold) {
    chosen.label = BetaCase::kI;
  } else if (log_log_n > 0.0 && std::exp(r.c) <= log_n / (3.0 * log_log_n)) {
    chosen.label = BetaCase::kII;
  } else {
    chosen = sparse_layer_bounds(r);
  }
  out.label = chosen.label;
  out.beta_lower = chosen.lower;
  out.beta_upper = chosen.upper;
  if (r.c >= config.case_threshold / 2.0 && r.c <= 2.0 * config.case_threshold) {
    auto alt = collision;
    alt.label = r.c <= config.case_threshold ? BetaCase::kI : BetaCase::kII;
    out.alternatives = {alt, sparse_layer_bounds(r)};
  }
  out.subthreshold_size = subthreshold_set_size(r, config.epsilon);
  try {
    out.predicted_diameter = predict_diameter(r.n, r.p, config.diameter_margin);
  } catch (const Error&) {
    out.predicted_diameter.reset();
  }
  return out;
}

inline void check_unit_interval(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorCode::kDomainError, "x must lie in (0, 1]");
}

/// 1 - x * floor(1/x): limiting exponent of beta for p = n^(x-1).
inline double zigzag_f(double x) {
  check_unit_interval(x);
  return 1.0 - x * std::floor(1.0 / x);
}

/// 1 / (x * floor(1/x)): limiting ratio of the case (iii) upper and lower bounds.
inline double ratio_bound(double x) {
  check_unit_interval(x);
  return 1.0 / (x * std::floor(1.0 / x));
}

struct ChernoffTolerance {
  double epsilon = 0.0;
  /// The tail bound only holds for epsilon < 3/2.
  bool in_validity_range = true;
};

/// Smallest epsilon with 2 exp(-epsilon^2 E / 3) <= failure_prob.
inline ChernoffTolerance chernoff_tolerance(double expectation, double failure_prob) {
  if (!(expectation > 0.0)) throw Error(ErrorCode::kDomainError, "expectation must be positive");
  if (!(failure_prob > 0.0 && failure_prob < 1.0)) {
    throw Error(ErrorCode::kDomainError, "failure probability must lie in (0, 1)");
  }
  const double eps = std::sqrt(3.0 * std::log(2.0 / failure_prob) / expectation);
  return {eps, eps < 1.5};
}

}  // namespace metridim
