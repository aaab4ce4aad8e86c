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
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hydrovqe/fermion.hpp"

namespace hvqe {

/// Malformed or inconsistent integral input. `line` is 1-based, 0 if unknown.
class FcidumpError : public std::runtime_error {
 public:
  FcidumpError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/**
 * Molecular integrals in an orthonormal molecular-orbital basis.
 *
 * The spatial tensors are the source of truth: `spatial_one_body(i, j)` and
 * chemists'-notation `spatial_two_body(i, j, k, l) = (ij|kl)`. Spin orbitals
 * use the blocked convention p = i + m * spin (all alpha, then all beta).
 * The spin-orbital accessors return the coefficients of
 *   H = sum h(p,q) a+_p a_q + 1/2 sum h(p,q,r,s) a+_p a+_q a_r a_s,
 * so two_body(p,q,r,s) = <pq|sr> = (ps|qr), zero unless spin(p)==spin(s) and
 * spin(q)==spin(r).
 */
class SpinOrbitalIntegrals {
 public:
  SpinOrbitalIntegrals() = default;

  /// Validates the real-integral symmetries within 1e-10.
  SpinOrbitalIntegrals(int n_electrons, int spin_z2, double core_energy,
                       Eigen::MatrixXd one_body, std::vector<double> two_body);

  int n_spatial() const { return n_spatial_; }
  int n_spin_orbitals() const { return 2 * n_spatial_; }
  int n_electrons() const { return n_electrons_; }
  int spin_z2() const { return spin_z2_; }
  int n_alpha() const { return (n_electrons_ + spin_z2_) / 2; }
  int n_beta() const { return (n_electrons_ - spin_z2_) / 2; }
  double core_energy() const { return core_energy_; }

  const Eigen::MatrixXd& spatial_one_body() const { return one_body_; }
  const std::vector<double>& spatial_two_body_data() const { return two_body_; }
  double spatial_two_body(int i, int j, int k, int l) const {
    return two_body_[index(i, j, k, l)];
  }

  double one_body(int p, int q) const;
  double two_body(int p, int q, int r, int s) const;

  /// Energy of the aufbau determinant (lowest n_alpha / n_beta orbitals).
  double reference_energy() const;

  friend bool operator==(const SpinOrbitalIntegrals&,
                         const SpinOrbitalIntegrals&) = default;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    const auto m = static_cast<std::size_t>(n_spatial_);
    return ((static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m +
            static_cast<std::size_t>(k)) * m + static_cast<std::size_t>(l);
  }

  int n_spatial_ = 0;
  int n_electrons_ = 0;
  int spin_z2_ = 0;
  double core_energy_ = 0.0;
  Eigen::MatrixXd one_body_;
  std::vector<double> two_body_;
};

/// Reads FCIDUMP text: a &FCI ... &END namelist (NORB, NELEC, MS2) then
/// "value i j k l" lines in chemists' notation with 1-based indices.
SpinOrbitalIntegrals parse_fcidump(std::istream& in);
SpinOrbitalIntegrals parse_fcidump(std::string_view text);
SpinOrbitalIntegrals read_fcidump(const std::filesystem::path& path);

/// Writes the symmetry-unique nonzero entries at full double precision.
void write_fcidump(std::ostream& out, const SpinOrbitalIntegrals& ints);
std::string to_fcidump(const SpinOrbitalIntegrals& ints);

struct ActiveSpaceSpec {
  std::vector<int> frozen_occupied;
  std::vector<int> removed_virtual;

  bool empty() const { return frozen_occupied.empty() && removed_virtual.empty(); }
};

/**
 * Restricts to active orbitals. Frozen doubly occupied orbitals are folded
 * into the core energy and the active one-body integrals through the
 * inactive Fock operator; removed virtuals are dropped.
 */
SpinOrbitalIntegrals apply_active_space(const SpinOrbitalIntegrals& ints,
                                        const ActiveSpaceSpec& spec);

/// Second-quantized electronic Hamiltonian including the core energy.
FermionOperatorSum build_hamiltonian(const SpinOrbitalIntegrals& ints);

/// Total, alpha or beta number operator over blocked spin orbitals.
enum class SpinSector { total, alpha, beta };
FermionOperatorSum number_operator(int n_spatial, SpinSector sector);

enum class UccLevel { uccs, uccsd };

UccLevel parse_ucc_level(std::string_view s);
std::string to_string(UccLevel level);

struct ExcitationGenerator {
  /// Anti-Hermitian T_k - T_k^dagger.
  FermionOperatorSum generator;
  int slot = 0;
  /// Spin-orbital indices, occupied then virtual.
  std::vector<int> occupied;
  std::vector<int> virtuals;
};

struct UccGenerators {
  std::vector<ExcitationGenerator> generators;
  /// Nonempty when the list is empty for a structural reason.
  std::string diagnostic;
};

/// Aufbau spin-orbital occupation (bit p set for occupied spin orbital p).
std::uint64_t reference_occupation(int n_spatial, int n_alpha, int n_beta);

/**
 * Spin-preserving single (and double) excitations out of the aufbau
 * reference, one parameter slot each, in a fixed order: singles alpha then
 * beta, then doubles alpha-alpha, alpha-beta, beta-beta.
 */
UccGenerators build_ucc_generators(const SpinOrbitalIntegrals& ints,
                                   UccLevel level);

struct ManifestEntry {
  double bond_length = 0.0;
  std::filesystem::path fcidump;
};

/// Lines "bond_length path"; '#' starts a comment. Relative paths resolve
/// against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

}  // namespace hvqe
