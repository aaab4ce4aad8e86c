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

#include "hydrovqe/circuit.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hvqe {

namespace {

constexpr GateKind kAllKinds[] = {
    GateKind::h,  GateKind::x,  GateKind::y,     GateKind::z,  GateKind::rx,
    GateKind::ry, GateKind::rz, GateKind::phase, GateKind::cx, GateKind::pauli_rotation};

GateKind kind_from_name(std::string_view name, int line_no) {
  for (GateKind k : kAllKinds) {
    if (gate_name(k) == name) return k;
  }
  throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                              ": unknown gate '" + std::string(name) + "'");
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::h: return "h";
    case GateKind::x: return "x";
    case GateKind::y: return "y";
    case GateKind::z: return "z";
    case GateKind::rx: return "rx";
    case GateKind::ry: return "ry";
    case GateKind::rz: return "rz";
    case GateKind::phase: return "p";
    case GateKind::cx: return "cx";
    case GateKind::pauli_rotation: return "pexp";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::rx || kind == GateKind::ry || kind == GateKind::rz ||
         kind == GateKind::phase || kind == GateKind::pauli_rotation;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Circuit: qubit count out of range");
  }
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_) {
    throw std::out_of_range("Circuit: qubit " + std::to_string(q) +
                            " outside register of " + std::to_string(n_qubits_));
  }
}

int Circuit::num_parameters() const {
  std::vector<char> seen;
  for (const Gate& g : gates_) {
    if (g.slot < 0) continue;
    if (static_cast<std::size_t>(g.slot) >= seen.size()) {
      seen.resize(static_cast<std::size_t>(g.slot) + 1, 0);
    }
    seen[static_cast<std::size_t>(g.slot)] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::logic_error("Circuit: parameter slots are not contiguous from 0");
  }
  return static_cast<int>(seen.size());
}

Circuit& Circuit::append(const Gate& g) {
  if (g.kind == GateKind::pauli_rotation) {
    if (g.pauli.n_qubits() != n_qubits_) {
      throw std::invalid_argument("Circuit: Pauli rotation width mismatch");
    }
  } else {
    check_qubit(g.target);
    if (g.kind == GateKind::cx) {
      check_qubit(g.control);
      if (g.control == g.target) {
        throw std::invalid_argument("Circuit: cx control equals target");
      }
    }
  }
  if (g.slot >= 0 && !is_rotation(g.kind)) {
    throw std::invalid_argument("Circuit: only rotations take parameters");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("Circuit::append: width mismatch");
  }
  for (const Gate& g : other.gates_) gates_.push_back(g);
  return *this;
}

namespace {

Gate fixed_gate(GateKind kind, int target, int control = -1, double angle = 0.0) {
  Gate g;
  g.kind = kind;
  g.target = target;
  g.control = control;
  g.angle = angle;
  return g;
}

}  // namespace

Circuit& Circuit::h(int q) { return append(fixed_gate(GateKind::h, q)); }
Circuit& Circuit::x(int q) { return append(fixed_gate(GateKind::x, q)); }
Circuit& Circuit::y(int q) { return append(fixed_gate(GateKind::y, q)); }
Circuit& Circuit::z(int q) { return append(fixed_gate(GateKind::z, q)); }
Circuit& Circuit::rx(int q, double a) { return append(fixed_gate(GateKind::rx, q, -1, a)); }
Circuit& Circuit::ry(int q, double a) { return append(fixed_gate(GateKind::ry, q, -1, a)); }
Circuit& Circuit::rz(int q, double a) { return append(fixed_gate(GateKind::rz, q, -1, a)); }
Circuit& Circuit::phase(int q, double a) {
  return append(fixed_gate(GateKind::phase, q, -1, a));
}
Circuit& Circuit::cx(int control, int target) {
  return append(fixed_gate(GateKind::cx, target, control));
}

Circuit& Circuit::pauli_rotation(const PauliString& p, double angle) {
  Gate g = fixed_gate(GateKind::pauli_rotation, 0);
  g.angle = angle;
  g.pauli = p.letters_only();
  if (p.phase() % 2 != 0) {
    throw std::invalid_argument("Circuit: Pauli rotation needs a Hermitian string");
  }
  if (p.phase() == 2) g.angle = -angle;
  return append(g);
}

Circuit& Circuit::pauli_rotation(const PauliString& p, int slot, double scale) {
  if (slot < 0) throw std::invalid_argument("Circuit: negative parameter slot");
  if (p.phase() % 2 != 0) {
    throw std::invalid_argument("Circuit: Pauli rotation needs a Hermitian string");
  }
  Gate g = fixed_gate(GateKind::pauli_rotation, 0);
  g.slot = slot;
  g.scale = p.phase() == 2 ? -scale : scale;
  g.pauli = p.letters_only();
  return append(g);
}

Circuit& Circuit::rotation_slot(GateKind kind, int q, int slot, double scale) {
  if (slot < 0) throw std::invalid_argument("Circuit: negative parameter slot");
  Gate g = fixed_gate(kind, q);
  g.slot = slot;
  g.scale = scale;
  return append(g);
}

void write_circuit(std::ostream& out, const Circuit& c) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "qubits " << c.n_qubits() << '\n';
  for (const Gate& g : c.gates()) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::pauli_rotation) {
      out << ' ' << g.pauli.letters();
    } else {
      if (g.kind == GateKind::cx) out << ' ' << g.control;
      out << ' ' << g.target;
    }
    if (is_rotation(g.kind)) {
      if (g.slot >= 0) {
        out << " slot " << g.slot << " scale " << g.scale;
      } else {
        out << " angle " << g.angle;
      }
    }
    out << '\n';
  }
  out.precision(old);
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  Circuit c;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    auto fail = [line_no](const std::string& why) {
      return std::invalid_argument("circuit line " + std::to_string(line_no) +
                                   ": " + why);
    };
    if (!have_header) {
      int n = 0;
      if (head != "qubits" || !(ls >> n)) throw fail("expected 'qubits N'");
      c = Circuit(n);
      have_header = true;
      continue;
    }
    Gate g = fixed_gate(kind_from_name(head, line_no), 0);
    if (g.kind == GateKind::pauli_rotation) {
      std::string letters;
      if (!(ls >> letters)) throw fail("missing Pauli letters");
      g.pauli = PauliString::from_letters(letters);
    } else {
      if (g.kind == GateKind::cx && !(ls >> g.control)) throw fail("missing control");
      if (!(ls >> g.target)) throw fail("missing target");
    }
    if (is_rotation(g.kind)) {
      std::string key;
      if (!(ls >> key)) throw fail("missing angle or slot");
      if (key == "angle") {
        if (!(ls >> g.angle)) throw fail("bad angle");
      } else if (key == "slot") {
        std::string scale_key;
        if (!(ls >> g.slot >> scale_key >> g.scale) || scale_key != "scale") {
          throw fail("expected 'slot K scale S'");
        }
      } else {
        throw fail("expected 'angle' or 'slot'");
      }
    }
    c.append(g);
  }
  if (!have_header) throw std::invalid_argument("circuit: empty input");
  return c;
}

}  // namespace hvqe
