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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hvqe {

enum class OptimizerKind { nelder_mead, bfgs_numeric_gradient, spsa };

OptimizerKind parse_optimizer_kind(std::string_view s);
std::string to_string(OptimizerKind kind);

struct OptimizerSpec {
  OptimizerKind kind = OptimizerKind::bfgs_numeric_gradient;
  int max_evals = 20000;
  /// Converged once |dE| stays below this over 3 accepted steps (Hartree).
  double tolerance = 1e-8;
  std::uint64_t seed = 7;
  /// Stop as soon as an evaluation reaches this energy.
  std::optional<double> stop_below;
};

void validate(const OptimizerSpec& spec);

/// The objective returned NaN or infinity.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TracePoint {
  int eval = 0;
  double energy = 0.0;
  double best = 0.0;
};

struct OptimizeResult {
  std::vector<double> params;
  double energy = 0.0;
  int evals = 0;
  bool converged = false;
  /// Every evaluation in order; `best` is the running minimum.
  std::vector<TracePoint> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes from `start`, returning the best point seen.
OptimizeResult optimize(const Objective& f, std::vector<double> start,
                        const OptimizerSpec& spec);

/// Central-difference gradient with step `h`.
std::vector<double> central_gradient(const Objective& f, std::span<const double> x,
                                     double h);

}  // namespace hvqe
