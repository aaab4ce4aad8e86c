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
#include <string>

#include "hydrovqe/circuit.hpp"

namespace hvqe {

struct GateCounts {
  std::int64_t g1 = 0;  ///< single-qubit gates (see SingleQubitCounting)
  std::int64_t g2 = 0;  ///< CX gates
  int q = 0;            ///< qubits

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/**
 * Expands every Pauli-exponential macro into basis changes (H for X,
 * RX(pi/2) for Y), a CX ladder over the support in ascending qubit order,
 * RZ on the last support qubit and the mirrored uncompute. A weight-w macro
 * costs 2(w-1) CX. Identity macros are a global phase and are dropped. No
 * cancellation between neighbouring macros is attempted, so the counts are
 * an upper bound.
 */
Circuit transpile(const Circuit& c);

/**
 * `fused` charges each maximal run of single-qubit gates on one qubit as a
 * single general rotation (one U3), the gate set in which hardware error
 * rates are quoted. `raw` charges every single-qubit instruction.
 */
enum class SingleQubitCounting { fused, raw };

/// Counts gates in a circuit with no macros left.
GateCounts count_gates(const Circuit& transpiled,
                       SingleQubitCounting mode = SingleQubitCounting::fused);

GateCounts transpile_and_count(const Circuit& c,
                               SingleQubitCounting mode = SingleQubitCounting::fused);

std::string to_json(const GateCounts& counts);

}  // namespace hvqe
