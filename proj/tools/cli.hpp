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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_output.hpp"
#include "metridim.hpp"

namespace metridim::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kData = 3 };

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item.substr(first), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || v < 0 || item.find_first_not_of(" \t", first + used) != std::string::npos) {
      throw Error(ErrorCode::kParse, "bad vertex id '" + item + "'");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

/// Edge probability of the input graph, used to size random and top-degree
/// sets when the caller gives no explicit size.
inline double edge_density(const Graph& g) {
  const double n = static_cast<double>(g.num_vertices());
  return static_cast<double>(g.num_edges()) / (n * (n - 1.0) / 2.0);
}

/// Runs one command line. Exit codes: 0 success, 2 usage error, 3 data error
/// (unreadable input, disconnected graph where connectivity is required).
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Metric dimension of graphs: exact, approximate and random-graph predictions", "metridim"};
  app.require_subcommand(1);

  // gen
  std::string gen_family = "gnp";
  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->add_option("--family", gen_family, "gnp | path | cycle | complete | petersen")
      ->check(CLI::IsMember({"gnp", "path", "cycle", "complete", "petersen"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--p", gen_p, "Edge probability (gnp)");
  gen->add_option("--seed", gen_seed, "Seed (gnp)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_algo;
  std::string solve_input;
  std::optional<std::size_t> solve_w, solve_k;
  double solve_epsilon = 0.5;
  std::uint64_t solve_attempts = 100;
  std::uint64_t solve_seed = 0;
  std::optional<std::uint64_t> node_cap;
  std::optional<std::uint64_t> time_cap_ms;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t pair_cap = kDefaultPairCoverCap;
  auto* solve = app.add_subcommand("solve", "Compute or approximate the metric dimension");
  solve->add_option("--algo", solve_algo, "exact | exhaustive | greedy | random | topdeg")
      ->required()
      ->check(CLI::IsMember({"exact", "exhaustive", "greedy", "random", "topdeg"}));
  solve->add_option("--input", solve_input, "Edge-list file")->required();
  solve->add_option("--w", solve_w, "Random set size (random)");
  solve->add_option("--k", solve_k, "Landmark count (topdeg)");
  solve->add_option("--epsilon", solve_epsilon, "epsilon in (2 + epsilon) ln n / ln(1/q) when --w is absent");
  solve->add_option("--max-attempts", solve_attempts, "Random draws before giving up");
  solve->add_option("--seed", solve_seed, "Seed (random)");
  solve->add_option("--node-cap", node_cap, "Branch-and-bound node limit (exact)");
  solve->add_option("--time-cap-ms", time_cap_ms, "Branch-and-bound wall-clock limit (exact)");
  solve->add_option("--oracle-cap", oracle_cap, "Largest n for exhaustive search");
  solve->add_option("--pair-cap", pair_cap, "Largest n for pair-cover based solvers");

  // verify
  std::string verify_input;
  std::string verify_set;
  auto* verify = app.add_subcommand("verify", "Check whether a vertex set resolves a graph");
  verify->add_option("--input", verify_input, "Edge-list file")->required();
  verify->add_option("--set", verify_set, "Comma-separated vertex ids")->required();

  // predict
  std::size_t pred_n = 0;
  double pred_p = 0.0;
  PredictConfig pred_config;
  auto* predict = app.add_subcommand("predict", "Regime parameters and predicted metric dimension of G(n,p)");
  predict->add_option("--n", pred_n, "Vertex count")->required();
  predict->add_option("--p", pred_p, "Edge probability")->required();
  predict->add_option("--epsilon", pred_config.epsilon, "epsilon for the sub-threshold set size");
  predict->add_option("--margin", pred_config.diameter_margin, "Diameter threshold margin");
  predict->add_option("--c0", pred_config.case_threshold, "Largest c treated as case (i)");

  // sweep
  SweepParams sweep_params;
  std::string sweep_grid;
  std::string sweep_algos = "greedy";
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Sample G(n, n^(x-1)) over an x grid and write CSV");
  sweep->add_option("--n", sweep_params.n, "Vertex count")->required();
  sweep->add_option("--x-grid", sweep_grid, "start:stop:step, values in (0, 1]")->required();
  sweep->add_option("--trials", sweep_params.trials, "Trials per grid point");
  sweep->add_option("--algos", sweep_algos, "Comma-separated subset of greedy,random");
  sweep->add_option("--seed", sweep_params.master_seed, "Master seed");
  sweep->add_option("--epsilon", sweep_params.epsilon, "epsilon for the random set size");
  sweep->add_option("--max-attempts", sweep_params.max_attempts, "Random draws per sample");
  sweep->add_flag("--timings", sweep_params.record_timings, "Record wall-clock runtime_ms (breaks byte-identical output)");
  sweep->add_option("--out", sweep_out, "CSV file (default stdout)");

  // expansion
  ExpansionParams exp_params;
  std::string exp_out;
  std::optional<double> exp_tolerance;
  auto* expansion = app.add_subcommand("expansion", "Measure sphere sizes in G(n,p) against d^radius");
  expansion->add_option("--n", exp_params.n, "Vertex count")->required();
  expansion->add_option("--p", exp_params.p, "Edge probability")->required();
  expansion->add_option("--radius", exp_params.max_radius, "Largest radius");
  expansion->add_option("--trials", exp_params.trials, "Trials");
  expansion->add_option("--seed", exp_params.seed, "Master seed");
  expansion->add_option("--landmarks", exp_params.landmark_count, "Landmark set size");
  expansion->add_option("--samples", exp_params.sample_count, "Sampled vertices per trial");
  expansion->add_option("--tolerance", exp_tolerance, "Allowed relative error");
  expansion->add_option("--out", exp_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g = [&] {
        if (gen_family == "gnp") return gnp({gen_n, gen_p, gen_seed});
        if (gen_family == "path") return path_graph(gen_n);
        if (gen_family == "cycle") return cycle_graph(gen_n);
        if (gen_family == "complete") return complete_graph(gen_n);
        return petersen_graph();
      }();
      Output sink(out, gen_out);
      write_edge_list(sink.get(), g);
      return kOk;
    }

    if (solve->parsed()) {
      const Graph g = read_edge_list_file(solve_input);
      json result;
      if (solve_algo == "exhaustive") {
        result = to_json(exhaustive_beta(g, oracle_cap));
        result["found"] = true;
      } else if (solve_algo == "exact") {
        SearchBudget budget;
        budget.max_nodes = node_cap;
        if (time_cap_ms) budget.max_time = std::chrono::milliseconds(*time_cap_ms);
        result = to_json(exact_beta(g, budget, pair_cap));
        result["found"] = true;
      } else if (solve_algo == "greedy") {
        result = to_json(greedy_resolving(g, pair_cap));
        result["found"] = true;
      } else if (solve_algo == "random") {
        require_connected(g);
        const std::size_t n = g.num_vertices();
        std::size_t w = 0;
        if (solve_w) {
          w = *solve_w;
        } else {
          const double p = edge_density(g);
          const double q = p < 1.0 ? dense_q(p) : 1.0;
          w = q < 1.0 ? std::clamp<std::size_t>(random_set_size(n, q, solve_epsilon), 1, n - 1) : n - 1;
        }
        result = to_json(random_resolving(g, w, solve_attempts, solve_seed));
        result["w"] = w;
      } else {
        const std::size_t k = solve_k.value_or(std::min(top_degree_set_size(g.num_vertices()), g.num_vertices()));
        result = to_json(topdeg_resolving(g, k));
        result["k"] = k;
      }
      result["algorithm"] = solve_algo;
      out << result.dump(2) << '\n';
      return kOk;
    }

    if (verify->parsed()) {
      const Graph g = read_edge_list_file(verify_input);
      const auto set = parse_vertex_list(verify_set);
      const auto check = is_resolving(g, set);
      out << json{{"resolving", check.resolving}, {"witness", to_json(check.witness)}}.dump(2) << '\n';
      return kOk;
    }

    if (predict->parsed()) {
      const Regime regime = compute_regime(pred_n, pred_p);
      const Prediction prediction = predict_beta(regime, pred_config);
      out << json{{"regime", to_json(regime)}, {"prediction", to_json(prediction)}}.dump(2) << '\n';
      return kOk;
    }

    if (sweep->parsed()) {
      sweep_params.x_grid = parse_x_grid(sweep_grid);
      sweep_params.run_greedy = false;
      sweep_params.run_random = false;
      for (const auto& algo : CLI::detail::split(sweep_algos, ',')) {
        if (algo == "greedy") {
          sweep_params.run_greedy = true;
        } else if (algo == "random") {
          sweep_params.run_random = true;
        } else {
          err << "usage error: unknown sweep algorithm '" << algo << "'\n";
          return kUsage;
        }
      }
      const SweepResult result = run_sweep(sweep_params);
      for (const auto& skip : result.skipped) {
        err << "skipped x=" << format_double(skip.x) << " trial=" << skip.trial << " seed=" << skip.seed << ": "
            << skip.reason << '\n';
      }
      Output sink(out, sweep_out);
      write_sweep_csv(sink.get(), result.records);
      if (!sweep_out.empty()) {
        json summary = json::array();
        for (const auto& point : result.summary) {
          summary.push_back({{"x", point.x},
                             {"records", point.records},
                             {"mean_log_beta_greedy", point.mean_log_beta_greedy},
                             {"zigzag_prediction", point.zigzag_prediction}});
        }
        out << json{{"records", result.records.size()}, {"skipped", result.skipped.size()}, {"points", summary}}.dump(2)
            << '\n';
      }
      return kOk;
    }

    if (expansion->parsed()) {
      exp_params.tolerance = exp_tolerance;
      const ExpansionReport report = expansion_report(exp_params);
      Output sink(out, exp_out);
      write_expansion_csv(sink.get(), report);
      for (const auto& warning : report.warnings) err << "warning: " << warning << '\n';
      if (!exp_out.empty()) {
        json trials = json::array();
        for (const auto& t : report.trials) {
          trials.push_back({{"trial", t.trial},
                            {"seed", t.seed},
                            {"connected", t.connected},
                            {"max_abs_rel_error", t.max_abs_rel_error},
                            {"set_rel_error", t.set_rel_error}});
        }
        out << json{{"d", report.d},
                    {"tolerance", report.tolerance},
                    {"max_abs_rel_error", report.max_abs_rel_error},
                    {"trials_within_tolerance", report.trials_within_tolerance},
                    {"trials", trials}}
                   .dump(2)
            << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << (e.is_data_error() ? "data error: " : "usage error: ") << e.what() << '\n';
    return e.is_data_error() ? kData : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace metridim::cli
