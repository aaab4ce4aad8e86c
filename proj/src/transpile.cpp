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

#include "hydrovqe/transpile.hpp"

#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace hvqe {

namespace {

void expand_pauli_rotation(Circuit& out, const Gate& g) {
  const PauliString& p = g.pauli;
  std::vector<int> support;
  for (int q = 0; q < p.n_qubits(); ++q) {
    if (p.letter(q) != PauliLetter::I) support.push_back(q);
  }
  if (support.empty()) return;
  auto basis_in = [&] {
    for (int q : support) {
      if (p.letter(q) == PauliLetter::X) out.h(q);
      if (p.letter(q) == PauliLetter::Y) out.rx(q, std::numbers::pi / 2);
    }
  };
  auto basis_out = [&] {
    for (int q : support) {
      if (p.letter(q) == PauliLetter::X) out.h(q);
      if (p.letter(q) == PauliLetter::Y) out.rx(q, -std::numbers::pi / 2);
    }
  };
  basis_in();
  for (std::size_t i = 0; i + 1 < support.size(); ++i) out.cx(support[i], support[i + 1]);
  const int last = support.back();
  if (g.slot >= 0) {
    out.rotation_slot(GateKind::rz, last, g.slot, g.scale);
  } else {
    out.rz(last, g.angle);
  }
  for (std::size_t i = support.size() - 1; i > 0; --i) out.cx(support[i - 1], support[i]);
  basis_out();
}

}  // namespace

Circuit transpile(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::pauli_rotation) {
      expand_pauli_rotation(out, g);
    } else {
      out.append(g);
    }
  }
  return out;
}

GateCounts count_gates(const Circuit& transpiled, SingleQubitCounting mode) {
  GateCounts counts;
  counts.q = transpiled.n_qubits();
  std::vector<bool> in_run(static_cast<std::size_t>(transpiled.n_qubits()), false);
  for (const Gate& g : transpiled.gates()) {
    switch (g.kind) {
      case GateKind::cx:
        ++counts.g2;
        in_run[static_cast<std::size_t>(g.control)] = false;
        in_run[static_cast<std::size_t>(g.target)] = false;
        break;
      case GateKind::pauli_rotation:
        throw std::invalid_argument("count_gates: circuit still contains macros");
      default: {
        const auto t = static_cast<std::size_t>(g.target);
        if (mode == SingleQubitCounting::raw || !in_run[t]) ++counts.g1;
        in_run[t] = true;
        break;
      }
    }
  }
  return counts;
}

GateCounts transpile_and_count(const Circuit& c, SingleQubitCounting mode) {
  return count_gates(transpile(c), mode);
}

std::string to_json(const GateCounts& counts) {
  nlohmann::ordered_json j{{"g1", counts.g1}, {"g2", counts.g2}, {"q", counts.q}};
  return j.dump() + "\n";
}

}  // namespace hvqe
