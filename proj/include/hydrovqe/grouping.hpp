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

#include <cstddef>
#include <string>
#include <vector>

#include "hydrovqe/circuit.hpp"
#include "hydrovqe/pauli.hpp"

namespace hvqe {

struct MeasurementGroup {
  /// Shared basis; I on qubits no member touches.
  PauliString basis;
  /// Indices into MeasurementPlan::terms.
  std::vector<std::size_t> members;
  /// Maps the shared eigenbasis to the computational basis.
  Circuit rotation;
};

/**
 * Partition of the non-identity terms of a Pauli sum into qubit-wise
 * commuting groups. The identity coefficient is carried as `offset`.
 */
struct MeasurementPlan {
  int n_qubits = 0;
  std::vector<PauliString> terms;
  std::vector<Complex> coefficients;
  Complex offset{};
  bool hermitian = false;
  std::vector<MeasurementGroup> groups;

  std::size_t n_terms_covered() const;
  double reduction_factor() const;
};

/// Greedy set cover: each round takes the candidate basis covering the most
/// uncovered terms (ties broken lexicographically by letters).
MeasurementPlan greedy_plan(const WeightedPauliSum& h);

/// Minimum-cardinality partition by exhaustive search.
MeasurementPlan exact_plan(const WeightedPauliSum& h, std::size_t max_terms = 20);

/// X -> H, Y -> RX(pi/2), Z and I -> nothing.
Circuit rotation_circuit(const PauliString& basis);
inline Circuit rotation_circuit(const MeasurementGroup& group) {
  return rotation_circuit(group.basis);
}

/// True iff `basis` has the member's letter wherever the member is not I.
bool basis_covers(const PauliString& basis, const PauliString& member);

/// Throws std::logic_error if any plan invariant fails.
void validate_plan(const MeasurementPlan& plan);

std::string plan_to_json(const MeasurementPlan& plan);

}  // namespace hvqe
