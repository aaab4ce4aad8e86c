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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hydrovqe/pauli.hpp"

namespace hvqe {

enum class GateKind {
  h,
  x,
  y,
  z,
  rx,
  ry,
  rz,
  phase,
  cx,
  /// exp(-i * angle/2 * P)
  pauli_rotation,
};

std::string_view gate_name(GateKind kind);
bool is_rotation(GateKind kind);

/**
 * One instruction. Rotation-type gates either carry a fixed `angle` or read
 * `scale * params[slot]` when `slot >= 0`.
 */
struct Gate {
  GateKind kind = GateKind::h;
  int target = 0;
  int control = -1;
  double angle = 0.0;
  int slot = -1;
  double scale = 1.0;
  PauliString pauli;

  double resolved_angle(std::span<const double> params) const {
    return slot >= 0 ? scale * params[static_cast<std::size_t>(slot)] : angle;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// One past the largest parameter slot; slots must be contiguous from 0.
  int num_parameters() const;

  Circuit& h(int q);
  Circuit& x(int q);
  Circuit& y(int q);
  Circuit& z(int q);
  Circuit& rx(int q, double angle);
  Circuit& ry(int q, double angle);
  Circuit& rz(int q, double angle);
  Circuit& phase(int q, double angle);
  Circuit& cx(int control, int target);
  Circuit& pauli_rotation(const PauliString& p, double angle);
  Circuit& pauli_rotation(const PauliString& p, int slot, double scale);
  /// Rotation about a single axis driven by a parameter slot.
  Circuit& rotation_slot(GateKind kind, int q, int slot, double scale);
  Circuit& append(const Gate& g);
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_qubit(int q) const;

  int n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/**
 * Line-oriented dump: a "qubits N" header then one gate per line, e.g.
 *   h 0
 *   cx 0 1
 *   rz 2 angle 0.5
 *   rz 2 slot 3 scale -1
 *   pexp XXYZ slot 3 scale -0.5
 */
void write_circuit(std::ostream& out, const Circuit& c);
std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace hvqe
