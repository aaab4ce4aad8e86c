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
#include <vector>

#include "hydrovqe/chem.hpp"
#include "hydrovqe/circuit.hpp"
#include "hydrovqe/encoding.hpp"

namespace hvqe {

struct AnsatzSpec {
  UccLevel level = UccLevel::uccsd;
  /// Repetitions of the generator product; each repetition shares the slots.
  int trotter_steps = 1;
};

/// Anti-Hermitian excitation generators on qubits, tagged with their scheme.
struct EncodedGenerators {
  EncodingScheme scheme;
  int n_qubits = 0;
  std::vector<WeightedPauliSum> generators;
};

EncodedGenerators encode_generators(const UccGenerators& gens,
                                    const EncodingScheme& scheme,
                                    const Sector& sector);

/**
 * X gates preparing `reference`, then per Trotter step one Pauli-exponential
 * macro for every term i*a*P of every generator in order. A generator G with
 * parameter t contributes exp(t*G/r) per step, i.e. exp(-i*(-2*a*t/r)/2*P).
 */
Circuit build_ansatz(const EncodedGenerators& gens, const EncodingScheme& scheme,
                     std::uint64_t reference, const AnsatzSpec& spec);

}  // namespace hvqe
