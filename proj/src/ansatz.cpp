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

#include "hydrovqe/ansatz.hpp"

#include <cmath>
#include <stdexcept>

namespace hvqe {

EncodedGenerators encode_generators(const UccGenerators& gens,
                                    const EncodingScheme& scheme,
                                    const Sector& sector) {
  EncodedGenerators out;
  out.scheme = scheme;
  out.n_qubits = encoded_qubit_count(scheme, sector.n_spin_orbitals);
  out.generators.reserve(gens.generators.size());
  for (const auto& g : gens.generators) {
    if (!g.generator.is_anti_hermitian()) {
      throw std::invalid_argument("encode_generators: generator is not anti-Hermitian");
    }
    out.generators.push_back(encode(g.generator, scheme, sector));
  }
  return out;
}

Circuit build_ansatz(const EncodedGenerators& gens, const EncodingScheme& scheme,
                     std::uint64_t reference, const AnsatzSpec& spec) {
  if (!(gens.scheme == scheme)) {
    throw std::invalid_argument("build_ansatz: generators were encoded with " +
                                to_string(gens.scheme) + ", expected " +
                                to_string(scheme));
  }
  if (spec.trotter_steps < 1) {
    throw std::invalid_argument("build_ansatz: trotter_steps must be positive");
  }
  Circuit c(gens.n_qubits);
  for (int q = 0; q < gens.n_qubits; ++q) {
    if ((reference >> q) & 1) c.x(q);
  }
  if (gens.n_qubits < 64 && (reference >> gens.n_qubits) != 0) {
    throw std::invalid_argument("build_ansatz: reference state wider than register");
  }
  const double per_step = 1.0 / spec.trotter_steps;
  for (int step = 0; step < spec.trotter_steps; ++step) {
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
      const WeightedPauliSum& g = gens.generators[k];
      if (g.n_qubits() != gens.n_qubits) {
        throw std::invalid_argument("build_ansatz: generator width mismatch");
      }
      for (const auto& [p, coeff] : g.terms()) {
        if (std::abs(coeff.real()) > 1e-10) {
          throw std::invalid_argument("build_ansatz: generator term " + p.letters() +
                                      " has a real coefficient");
        }
        if (p.is_identity()) continue;
        c.pauli_rotation(p, static_cast<int>(k), -2.0 * coeff.imag() * per_step);
      }
    }
  }
  return c;
}

}  // namespace hvqe
