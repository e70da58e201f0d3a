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

// Prints greedy metric-dimension estimates of G(n, n^(x-1)) next to the
// limiting exponent 1 - x floor(1/x).
//
//   zigzag_demo [n] [trials]

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "metridim.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const std::size_t trials = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;

  metridim::SweepParams params;
  params.n = n;
  params.x_grid = metridim::parse_x_grid("0.35:0.95:0.05");
  params.trials = trials;
  params.master_seed = 2026;
  const auto result = metridim::run_sweep(params);

  std::printf("%6s %8s %12s %10s\n", "x", "samples", "log_n beta", "f(x)");
  for (const auto& point : result.summary) {
    std::printf("%6.2f %8zu %12.4f %10.4f\n", point.x, point.records, point.mean_log_beta_greedy,
                point.zigzag_prediction);
  }
  return 0;
}
