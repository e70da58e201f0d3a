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

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "metridim/error.hpp"
#include "metridim/graph.hpp"

namespace metridim {

// Text format:
//   # comment lines are ignored, as are blank lines
//   n <count>          (required, before any edge)
//   u v                (one 0-indexed edge per line)

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n" || count < 0) fail("expected header 'n <count>'");
      n = static_cast<std::size_t>(count);
      have_header = true;
    } else {
      long long u = -1, v = -1;
      if (!(fields >> u >> v) || u < 0 || v < 0) fail("expected 'u v'");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
  }
  if (!have_header) throw Error(ErrorCode::kParse, "missing header 'n <count>'");
  return build_graph(n, edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace metridim
