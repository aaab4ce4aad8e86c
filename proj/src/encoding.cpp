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

#include "hydrovqe/encoding.hpp"

#include <stdexcept>

#include "hydrovqe/chem.hpp"

namespace hvqe {

namespace {

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

std::uint64_t range_mask(int first, int last_inclusive) {
  std::uint64_t m = 0;
  for (int q = first; q <= last_inclusive; ++q) m |= bit(q);
  return m;
}

void check_taper(const EncodingScheme& scheme, int n_spin_orbitals) {
  if (!scheme.taper_two_qubits) return;
  if (scheme.kind != EncodingKind::parity) {
    throw std::invalid_argument(
        "two-qubit tapering requires the parity encoding");
  }
  if (n_spin_orbitals < 2 || n_spin_orbitals % 2 != 0) {
    throw std::invalid_argument(
        "two-qubit tapering requires an even, blocked spin-orbital register");
  }
}

// Removes bits t1 < t2 from a mask.
std::uint64_t squeeze(std::uint64_t v, int t1, int t2) {
  const std::uint64_t low = v & (bit(t1) - 1);
  const std::uint64_t mid = (v >> (t1 + 1)) & (bit(t2 - t1 - 1) - 1);
  const std::uint64_t high = t2 + 1 >= 64 ? 0 : v >> (t2 + 1);
  return low | (mid << t1) | (high << (t2 - 1));
}

WeightedPauliSum taper(const WeightedPauliSum& full, const Sector& sector) {
  const int n = sector.n_spin_orbitals;
  const int m = n / 2;
  const int t1 = m - 1;
  const int t2 = n - 1;
  const int sign1 = (sector.n_alpha() % 2 == 0) ? 1 : -1;
  const int sign2 = (sector.n_electrons % 2 == 0) ? 1 : -1;
  WeightedPauliSum out(n - 2, full.drop_tolerance());
  for (const auto& [p, c] : full.terms()) {
    if (((p.x_bits() >> t1) & 1U) || ((p.x_bits() >> t2) & 1U)) {
      throw std::invalid_argument(
          "tapering: term " + p.letters() +
          " does not commute with the spin-sector parity symmetries");
    }
    Complex v = c;
    if ((p.z_bits() >> t1) & 1U) v *= sign1;
    if ((p.z_bits() >> t2) & 1U) v *= sign2;
    out.add(PauliString(n - 2, squeeze(p.x_bits(), t1, t2),
                        squeeze(p.z_bits(), t1, t2)),
            v);
  }
  return out;
}

}  // namespace

EncodingKind parse_encoding_kind(std::string_view s) {
  if (s == "jordan_wigner" || s == "jw") return EncodingKind::jordan_wigner;
  if (s == "parity") return EncodingKind::parity;
  if (s == "bravyi_kitaev" || s == "bk") return EncodingKind::bravyi_kitaev;
  throw std::invalid_argument("unknown encoding '" + std::string(s) +
                              "' (expected jordan_wigner, parity or bravyi_kitaev)");
}

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::jordan_wigner: return "jordan_wigner";
    case EncodingKind::parity: return "parity";
    case EncodingKind::bravyi_kitaev: return "bravyi_kitaev";
  }
  return "?";
}

std::string to_string(const EncodingScheme& scheme) {
  return to_string(scheme.kind) + (scheme.taper_two_qubits ? "+taper" : "");
}

ModeSets mode_sets(EncodingKind kind, int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes || n_modes > kMaxQubits) {
    throw std::out_of_range("mode_sets: mode out of range");
  }
  ModeSets s;
  switch (kind) {
    case EncodingKind::jordan_wigner:
      s.parity = bit(mode) - 1;
      s.remainder = s.parity;
      break;
    case EncodingKind::parity:
      s.update = range_mask(mode + 1, n_modes - 1);
      s.parity = mode > 0 ? bit(mode - 1) : 0;
      s.flip = s.parity;
      break;
    case EncodingKind::bravyi_kitaev: {
      // Fenwick tree: qubit k stores modes [k & (k+1), k].
      for (int k = mode | (mode + 1); k < n_modes; k |= k + 1) s.update |= bit(k);
      for (int k = mode - 1; k >= 0; k = (k & (k + 1)) - 1) s.parity |= bit(k);
      for (int k = mode - 1; k >= (mode & (mode + 1)); k = (k & (k + 1)) - 1) {
        s.flip |= bit(k);
      }
      s.remainder = s.parity & ~s.flip;
      break;
    }
  }
  return s;
}

std::uint64_t occupation_row(EncodingKind kind, int n_modes, int qubit) {
  if (qubit < 0 || qubit >= n_modes) {
    throw std::out_of_range("occupation_row: qubit out of range");
  }
  switch (kind) {
    case EncodingKind::jordan_wigner: return bit(qubit);
    case EncodingKind::parity: return range_mask(0, qubit);
    case EncodingKind::bravyi_kitaev: return range_mask(qubit & (qubit + 1), qubit);
  }
  return 0;
}

std::uint64_t encode_occupation(EncodingKind kind, int n_modes,
                                std::uint64_t occupation) {
  std::uint64_t state = 0;
  for (int q = 0; q < n_modes; ++q) {
    if (std::popcount(occupation_row(kind, n_modes, q) & occupation) & 1) {
      state |= bit(q);
    }
  }
  return state;
}

int encoded_qubit_count(const EncodingScheme& scheme, int n_spin_orbitals) {
  check_taper(scheme, n_spin_orbitals);
  return scheme.taper_two_qubits ? n_spin_orbitals - 2 : n_spin_orbitals;
}

WeightedPauliSum encode_ladder(EncodingKind kind, int n_modes, LadderOp op) {
  const ModeSets s = mode_sets(kind, n_modes, op.mode);
  const std::uint64_t j = bit(op.mode);
  // Majoranas c = X_U X_j Z_P and d = X_U Y_j Z_R; a = (c + i d)/2.
  const PauliString c(n_modes, s.update | j, s.parity);
  const PauliString d(n_modes, s.update | j, s.remainder | j);
  WeightedPauliSum out(n_modes);
  out.add(c, 0.5);
  out.add(d, Complex(0.0, op.creation ? -0.5 : 0.5));
  return out;
}

WeightedPauliSum encode(const FermionOperatorSum& op,
                        const EncodingScheme& scheme, const Sector& sector) {
  const int n = sector.n_spin_orbitals;
  if (op.n_modes() > n) {
    throw std::invalid_argument("encode: operator acts on " +
                                std::to_string(op.n_modes()) +
                                " modes but the register has " +
                                std::to_string(n));
  }
  check_taper(scheme, n);
  std::vector<WeightedPauliSum> ladder;
  ladder.reserve(2 * static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    ladder.push_back(encode_ladder(scheme.kind, n, ann(p)));
    ladder.push_back(encode_ladder(scheme.kind, n, cre(p)));
  }
  WeightedPauliSum full(n);
  for (const auto& [product, coeff] : op.terms()) {
    WeightedPauliSum acc(n);
    acc.add(PauliString(n), coeff);
    for (const auto& l : product) {
      acc = acc * ladder[2 * static_cast<std::size_t>(l.mode) + (l.creation ? 1 : 0)];
    }
    full += acc;
  }
  WeightedPauliSum out = scheme.taper_two_qubits ? taper(full, sector) : full;
  if (op.is_hermitian()) out.mark_hermitian();
  return out;
}

std::uint64_t taper_basis_state(std::uint64_t state, int n_spin_orbitals) {
  return squeeze(state, n_spin_orbitals / 2 - 1, n_spin_orbitals - 1);
}

std::uint64_t encode_reference_state(const EncodingScheme& scheme,
                                     const Sector& sector) {
  const int n = sector.n_spin_orbitals;
  check_taper(scheme, n);
  if (sector.n_electrons < 0 || sector.n_electrons > n || n % 2 != 0 ||
      sector.n_alpha() < 0 || sector.n_beta() < 0 ||
      sector.n_alpha() > n / 2 || sector.n_beta() > n / 2) {
    throw std::invalid_argument("reference state: inconsistent sector");
  }
  const std::uint64_t occ =
      reference_occupation(n / 2, sector.n_alpha(), sector.n_beta());
  const std::uint64_t state = encode_occupation(scheme.kind, n, occ);
  return scheme.taper_two_qubits ? taper_basis_state(state, n) : state;
}

}  // namespace hvqe
