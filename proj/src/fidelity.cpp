/*
 * Copyright 2026 The hydrovqe Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hydrovqe/fidelity.hpp"

#include <sstream>

#include <json.hpp>

namespace hvqe {

void validate(const ErrorRates& rates) {
  for (double e : {rates.e_g1, rates.e_g2, rates.e_q}) {
    if (!(e >= 0.0 && e < 1.0)) {
      throw std::invalid_argument("error rate " + std::to_string(e) +
                                  " outside [0, 1)");
    }
  }
}

std::vector<FidelityRow> sweep(const GateCounts& counts, const RateGrid& grid) {
  std::vector<FidelityRow> rows;
  rows.reserve(grid.e_g1.size() * grid.e_g2.size() * grid.e_q.size());
  for (double a : grid.e_g1) {
    for (double b : grid.e_g2) {
      for (double c : grid.e_q) {
        const ErrorRates r{a, b, c};
        rows.push_back({r, fidelity(counts, r)});
      }
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<FidelityRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "e_g1,e_g2,e_q,fidelity\n";
  for (const auto& r : rows) {
    out << r.rates.e_g1 << ',' << r.rates.e_g2 << ',' << r.rates.e_q << ','
        << r.fidelity << '\n';
  }
  return out.str();
}

std::string sweep_to_json(const GateCounts& counts, const std::vector<FidelityRow>& rows) {
  nlohmann::ordered_json j;
  j["counts"] = {{"g1", counts.g1}, {"g2", counts.g2}, {"q", counts.q}};
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"e_g1", r.rates.e_g1},
                   {"e_g2", r.rates.e_g2},
                   {"e_q", r.rates.e_q},
                   {"fidelity", r.fidelity}});
  }
  return j.dump(2) + "\n";
}

}  // namespace hvqe
