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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hydrovqe/pauli.hpp"

namespace hvqe {

/// Registers up to this width are diagonalized densely; wider ones use
/// matrix-free Lanczos.
inline constexpr int kDenseSolverQubits = 10;

/// Lowest eigenvalue over the full register, identity term included.
double exact_ground_energy(const WeightedPauliSum& h,
                           int dense_cap = kDefaultDenseCap);

/// All eigenvalues of the dense matrix, ascending.
Eigen::VectorXd dense_spectrum(const WeightedPauliSum& h,
                               int dense_cap = kDefaultDenseCap);

/// A diagonal (Z-only) operator and the eigenvalue that selects a sector.
struct SectorConstraint {
  WeightedPauliSum op;
  double value = 0.0;
};

/**
 * Lowest eigenvalue inside the computational-basis sector where every
 * constraint operator takes its value. `h` must not couple the sector to
 * anything outside it.
 */
double sector_ground_energy(const WeightedPauliSum& h,
                            std::span<const SectorConstraint> constraints);

/// All eigenvalues inside the sector, ascending.
Eigen::VectorXd sector_spectrum(const WeightedPauliSum& h,
                                std::span<const SectorConstraint> constraints);

/// Full spectrum assembled from the blocks labelled by the diagonal
/// operators; `h` must conserve every label.
Eigen::VectorXd block_spectrum(const WeightedPauliSum& h,
                               std::span<const WeightedPauliSum> diagonal_ops);

/// Value of a Z-only operator on a basis state.
double diagonal_value(const WeightedPauliSum& op, std::uint64_t basis_state);

}  // namespace hvqe
