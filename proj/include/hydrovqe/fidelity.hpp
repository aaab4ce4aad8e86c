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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrovqe/transpile.hpp"

namespace hvqe {

/// Constant per-gate and per-qubit error probabilities, each in [0, 1).
struct ErrorRates {
  double e_g1 = 0.0;
  double e_g2 = 0.0;
  double e_q = 0.0;
};

void validate(const ErrorRates& rates);

/**
 * Success probability of a circuit whose every gate and every qubit readout
 * fails independently: (1-e_g1)^g1 (1-e_g2)^g2 (1-e_q)^q. Summed in log
 * space so large counts do not underflow before the final exponential.
 */
template <typename Scalar = double>
Scalar fidelity(const GateCounts& counts, const ErrorRates& rates) {
  validate(rates);
  if (counts.g1 < 0 || counts.g2 < 0 || counts.q < 0) {
    throw std::invalid_argument("fidelity: negative gate count");
  }
  using std::exp;
  using std::log1p;
  const Scalar log_f = Scalar(counts.g1) * log1p(-Scalar(rates.e_g1)) +
                       Scalar(counts.g2) * log1p(-Scalar(rates.e_g2)) +
                       Scalar(counts.q) * log1p(-Scalar(rates.e_q));
  return exp(log_f);
}

/// Rate values per axis; the sweep is their Cartesian product.
struct RateGrid {
  std::vector<double> e_g1;
  std::vector<double> e_g2;
  std::vector<double> e_q;
};

struct FidelityRow {
  ErrorRates rates;
  double fidelity = 1.0;
};

/// Rows ordered with e_q varying fastest, then e_g2, then e_g1.
std::vector<FidelityRow> sweep(const GateCounts& counts, const RateGrid& grid);

std::string sweep_to_csv(const std::vector<FidelityRow>& rows);
std::string sweep_to_json(const GateCounts& counts, const std::vector<FidelityRow>& rows);

}  // namespace hvqe
