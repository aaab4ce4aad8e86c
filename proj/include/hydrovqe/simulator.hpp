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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hydrovqe/circuit.hpp"
#include "hydrovqe/grouping.hpp"
#include "hydrovqe/pauli.hpp"

namespace hvqe {

/// Default register cap for statevector execution.
inline constexpr int kDefaultQubitCap = 24;

/// Dense statevector, qubit 0 least significant.
class Statevector {
 public:
  explicit Statevector(int n_qubits, std::uint64_t basis_state = 0);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }
  Eigen::VectorXd probabilities() const { return amps_.cwiseAbs2(); }

  void apply(const Gate& g, std::span<const double> params = {});
  void apply(const Circuit& c, std::span<const double> params = {});
  void apply_single(int q, const Eigen::Matrix2cd& u);
  void apply_cx(int control, int target);
  /// exp(-i * angle/2 * P), applied exactly.
  void apply_pauli_rotation(const PauliString& p, double angle);

  Complex expectation(const PauliString& p) const;
  /// Real part of <psi|H|psi> including the identity term.
  double expectation(const WeightedPauliSum& h) const;

 private:
  int n_qubits_;
  Eigen::VectorXcd amps_;
};

Eigen::Matrix2cd gate_matrix(GateKind kind, double angle);

/// Runs `c` from `initial_state`; params.size() must match the slot count.
Statevector run(const Circuit& c, std::span<const double> params,
                std::uint64_t initial_state = 0, int qubit_cap = kDefaultQubitCap);

/// Exact energy, termwise.
double expectation(const Circuit& c, std::span<const double> params,
                   const WeightedPauliSum& h);

/// Exact coefficient-weighted sum of one group's members.
double group_expectation(const Statevector& state, const MeasurementPlan& plan,
                         std::size_t g);

/// Exact energy reconstructed group by group from rotated probabilities.
double plan_expectation(const Statevector& state, const MeasurementPlan& plan);

/// Shot estimate for one measurement group.
struct GroupEstimate {
  double mean = 0.0;      ///< sum of coefficient-weighted member means
  double variance = 0.0;  ///< variance of that mean (sample variance / shots)
};

struct SampledEnergy {
  double energy = 0.0;
  double standard_error = 0.0;
  std::vector<GroupEstimate> groups;
};

/// Samples group `g` from the exact rotated distribution. The random stream
/// depends only on (seed, g, shot block), so results are independent of
/// which thread evaluates which group.
GroupEstimate sample_group(const Statevector& state, const MeasurementPlan& plan,
                           std::size_t g, std::uint64_t shots, std::uint64_t seed);

/// Adds group estimates in group order.
SampledEnergy combine_groups(const MeasurementPlan& plan,
                             std::vector<GroupEstimate> groups);

SampledEnergy sample(const Circuit& c, std::span<const double> params,
                     const MeasurementPlan& plan, std::uint64_t shots_per_group,
                     std::uint64_t seed);

/// Counter-based stream: output k is a SplitMix64 finalisation of key + k.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z);
  static std::uint64_t key_for(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t block);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hvqe
