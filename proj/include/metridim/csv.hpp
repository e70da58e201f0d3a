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

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <system_error>

#include "metridim/expansion.hpp"

namespace metridim {

/// Shortest decimal that round-trips to the same double ("nan"/"inf" for
/// non-finite values).
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

inline constexpr const char* kExpansionCsvHeader = "trial,seed,vertex,radius,sphere_size,predicted,rel_error";

inline void write_expansion_csv(std::ostream& out, const ExpansionReport& report) {
  out << kExpansionCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << r.trial << ',' << r.seed << ',' << r.vertex << ',' << r.radius << ',' << r.sphere_size << ','
        << format_double(r.predicted) << ',' << format_double(r.rel_error) << '\n';
  }
}

}  // namespace metridim
