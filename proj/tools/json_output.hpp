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

#include <chrono>
#include <optional>

#include "json.hpp"
#include "metridim.hpp"

namespace metridim::cli {

using nlohmann::json;

inline json to_json(const std::optional<VertexPair>& pair) {
  if (!pair) return nullptr;
  return json::array({pair->first, pair->second});
}

inline json to_json(const SolveResult& r) {
  return {
      {"beta_estimate", r.beta_estimate},
      {"witness", r.witness},
      {"certified", r.certified},
      {"nodes_explored", r.nodes_explored},
      {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
  };
}

inline json to_json(const SearchOutcome& out) {
  json j = out.solution ? to_json(*out.solution) : json{{"beta_estimate", nullptr}, {"witness", nullptr}, {"certified", false}};
  j["found"] = out.found();
  j["attempts"] = out.attempts;
  j["candidate"] = out.candidate;
  j["collision"] = to_json(out.collision);
  return j;
}

inline json to_json(const Regime& r) {
  return {{"n", r.n}, {"p", r.p}, {"d", r.d}, {"i", r.i}, {"c", r.c},
          {"q", r.q}, {"eta", r.eta}, {"dense", r.dense}};
}

inline json to_json(const BetaEstimate& e) {
  return {{"case", std::string(to_string(e.label))}, {"beta_lower", e.lower}, {"beta_upper", e.upper}};
}

inline json to_json(const Prediction& p) {
  json alternatives = json::array();
  for (const auto& alt : p.alternatives) alternatives.push_back(to_json(alt));
  json diameter = nullptr;
  if (p.predicted_diameter) {
    diameter = {{"diameter", p.predicted_diameter->diameter}, {"ambiguous", p.predicted_diameter->ambiguous}};
  }
  return {
      {"case", std::string(to_string(p.label))},
      {"beta_lower", p.beta_lower},
      {"beta_upper", p.beta_upper},
      {"subthreshold_size", p.subthreshold_size},
      {"predicted_diameter", diameter},
      {"alternatives", alternatives},
  };
}

}  // namespace metridim::cli
