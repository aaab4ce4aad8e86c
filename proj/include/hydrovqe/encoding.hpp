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
#include <string_view>
#include <vector>

#include "hydrovqe/fermion.hpp"
#include "hydrovqe/pauli.hpp"

namespace hvqe {

enum class EncodingKind { jordan_wigner, parity, bravyi_kitaev };

struct EncodingScheme {
  EncodingKind kind = EncodingKind::parity;
  /// Removes the two Z2 parity qubits of blocked parity encoding.
  bool taper_two_qubits = false;

  friend bool operator==(const EncodingScheme&, const EncodingScheme&) = default;
};

EncodingKind parse_encoding_kind(std::string_view s);
std::string to_string(EncodingKind kind);
std::string to_string(const EncodingScheme& scheme);

/// Particle content of the register being encoded; needed for tapering.
struct Sector {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  int spin_z2 = 0;

  int n_alpha() const { return (n_electrons + spin_z2) / 2; }
  int n_beta() const { return (n_electrons - spin_z2) / 2; }
};

/**
 * Index sets of the binary-tree family of encodings for one mode:
 * update (qubits flipped with the occupation), parity (qubits whose parity
 * gives the sign of modes below j), flip (qubits that with qubit j give the
 * occupation of j) and remainder = parity \ flip. Each is a qubit mask.
 */
struct ModeSets {
  std::uint64_t update = 0;
  std::uint64_t parity = 0;
  std::uint64_t flip = 0;
  std::uint64_t remainder = 0;
};

ModeSets mode_sets(EncodingKind kind, int n_modes, int mode);

/// Row j of the binary matrix taking occupations to qubit values (mod 2).
std::uint64_t occupation_row(EncodingKind kind, int n_modes, int qubit);

/// Qubit basis state holding occupation vector `occupation`.
std::uint64_t encode_occupation(EncodingKind kind, int n_modes,
                                std::uint64_t occupation);

int encoded_qubit_count(const EncodingScheme& scheme, int n_spin_orbitals);

/// Ladder operators as two-term Pauli sums on the untapered register.
WeightedPauliSum encode_ladder(EncodingKind kind, int n_modes, LadderOp op);

/**
 * Maps a fermionic operator to qubits. Hermitian input yields a sum marked
 * Hermitian. With tapering the qubits holding the alpha and total parities
 * (m-1 and 2m-1 in blocked order) are replaced by the eigenvalues fixed by
 * the sector.
 */
WeightedPauliSum encode(const FermionOperatorSum& op,
                        const EncodingScheme& scheme, const Sector& sector);

/// Computational basis state of the aufbau determinant under the scheme
/// (bit q = qubit q).
std::uint64_t encode_reference_state(const EncodingScheme& scheme,
                                     const Sector& sector);

/// Drops tapered qubits from an untapered basis state.
std::uint64_t taper_basis_state(std::uint64_t state, int n_spin_orbitals);

}  // namespace hvqe
