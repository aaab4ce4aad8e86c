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

// Reference constructions used by the tests. They share no code with the
// library beyond its public types.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hydrovqe/chem.hpp"
#include "hydrovqe/encoding.hpp"
#include "hydrovqe/fermion.hpp"
#include "hydrovqe/pauli.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(HVQE_FIXTURE_DIR) / rel;
}

inline nlohmann::json reference_energies() {
  std::ifstream in(fixture("reference_energies.json"));
  return nlohmann::json::parse(in);
}

/// Metadata of one fixture, e.g. fixture_record("lih", "lih_1.6000.fcidump").
inline nlohmann::json fixture_record(const std::string& family, const std::string& file) {
  return reference_energies().at(family).at(file);
}

inline Eigen::Matrix2cd letter_matrix(char c) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -1i, 1i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity(); break;
  }
  return m;
}

/// Kronecker product with qubit 0 as the least significant factor.
inline Eigen::MatrixXcd kron_letters(const std::string& letters) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : letters) {
    const Eigen::Matrix2cd f = letter_matrix(c);
    Eigen::MatrixXcd next(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = f(i, j) * m;
    }
    m = next;
  }
  return m;
}

inline Eigen::MatrixXcd dense(const hvqe::WeightedPauliSum& h) {
  const auto dim = Eigen::Index{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : h.terms()) m += c * kron_letters(p.letters());
  return m;
}

inline std::string random_letters(std::mt19937_64& rng, int n, double identity_bias = 0.25) {
  std::string s;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    if (u(rng) < identity_bias) {
      s += 'I';
    } else {
      s += "XYZ"[rng() % 3];
    }
  }
  return s;
}

inline hvqe::WeightedPauliSum random_hermitian(std::mt19937_64& rng, int n, int n_terms) {
  hvqe::WeightedPauliSum h(n);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < n_terms; ++k) {
    h.add(hvqe::PauliString::from_letters(random_letters(rng, n)), g(rng));
  }
  h.mark_hermitian();
  return h;
}

/// a_p or a_p^dagger on an occupation bitmask; nullopt if the result is zero.
inline std::optional<std::pair<int, std::uint64_t>> apply_ladder(hvqe::LadderOp op,
                                                                 std::uint64_t occ) {
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const bool occupied = (occ & bit) != 0;
  if (occupied == op.creation) return std::nullopt;
  const int below = std::popcount(occ & (bit - 1));
  return std::pair{below % 2 ? -1 : 1, occ ^ bit};
}

/// Matrix of a fermionic operator in the occupation basis.
inline Eigen::MatrixXcd fermion_matrix(const hvqe::FermionOperatorSum& op) {
  const auto dim = Eigen::Index{1} << op.n_modes();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    for (const auto& [product, c] : op.terms()) {
      std::uint64_t state = col;
      int sign = 1;
      bool alive = true;
      for (auto it = product.rbegin(); it != product.rend() && alive; ++it) {
        const auto r = apply_ladder(*it, state);
        if (!r) {
          alive = false;
        } else {
          sign *= r->first;
          state = r->second;
        }
      }
      if (alive) m(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(col)) += double(sign) * c;
    }
  }
  return m;
}

/// Qubit basis state holding an occupation vector, from the encoding's
/// defining relation (not the library's tables).
inline std::uint64_t encoded_basis(hvqe::EncodingKind kind, int n, std::uint64_t occ) {
  std::uint64_t out = 0;
  for (int k = 0; k < n; ++k) {
    int lo = k;
    if (kind == hvqe::EncodingKind::parity) lo = 0;
    if (kind == hvqe::EncodingKind::bravyi_kitaev) lo = k & (k + 1);
    const std::uint64_t window = ((std::uint64_t{1} << (k + 1)) - 1) & ~((std::uint64_t{1} << lo) - 1);
    if (std::popcount(occ & window) % 2) out |= std::uint64_t{1} << k;
  }
  return out;
}

/// Occupation-basis matrix conjugated into the encoded qubit basis.
inline Eigen::MatrixXcd fermion_in_qubit_basis(const hvqe::FermionOperatorSum& op,
                                               hvqe::EncodingKind kind) {
  const Eigen::MatrixXcd f = fermion_matrix(op);
  const int n = op.n_modes();
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(f.rows(), f.cols());
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      q(static_cast<Eigen::Index>(encoded_basis(kind, n, static_cast<std::uint64_t>(i))),
        static_cast<Eigen::Index>(encoded_basis(kind, n, static_cast<std::uint64_t>(j)))) = f(i, j);
    }
  }
  return q;
}

/**
 * Full CI in the (n_alpha, n_beta) sector straight from spatial integrals,
 * H = E_core + sum h_pq a+_ps a_qs + 1/2 sum (pq|rs) a+_ps a+_rt a_st a_qs.
 */
inline double fci_energy(const hvqe::SpinOrbitalIntegrals& ints) {
  const int m = ints.n_spatial();
  const int n = 2 * m;
  const std::uint64_t alpha_mask = (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> states;
  std::vector<long> index(std::size_t{1} << n, -1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s & alpha_mask) == ints.n_alpha() &&
        std::popcount(s >> m) == ints.n_beta()) {
      index[s] = static_cast<long>(states.size());
      states.push_back(s);
    }
  }
  const auto d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  auto add_string = [&](const std::vector<hvqe::LadderOp>& ops, double c, Eigen::Index col) {
    std::uint64_t s = states[static_cast<std::size_t>(col)];
    int sign = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const auto r = apply_ladder(*it, s);
      if (!r) return;
      sign *= r->first;
      s = r->second;
    }
    h(index[s], col) += sign * c;
  };
  for (Eigen::Index col = 0; col < d; ++col) {
    h(col, col) += ints.core_energy();
    for (int sigma = 0; sigma < 2; ++sigma) {
      for (int p = 0; p < m; ++p) {
        for (int q = 0; q < m; ++q) {
          const double v = ints.spatial_one_body()(p, q);
          if (v != 0.0) add_string({hvqe::cre(p + m * sigma), hvqe::ann(q + m * sigma)}, v, col);
        }
      }
    }
    for (int sigma = 0; sigma < 2; ++sigma) {
      for (int tau = 0; tau < 2; ++tau) {
        for (int p = 0; p < m; ++p) {
          for (int q = 0; q < m; ++q) {
            for (int r = 0; r < m; ++r) {
              for (int s = 0; s < m; ++s) {
                const double v = ints.spatial_two_body(p, q, r, s);
                if (v == 0.0) continue;
                add_string({hvqe::cre(p + m * sigma), hvqe::cre(r + m * tau),
                            hvqe::ann(s + m * tau), hvqe::ann(q + m * sigma)},
                           0.5 * v, col);
              }
            }
          }
        }
      }
    }
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

/// Expectation over a dense state vector, for cross-checking simulators.
inline double dense_expectation(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi) {
  return psi.dot(h * psi).real();
}

/// Dense matrix of exp(-i angle/2 P).
inline Eigen::MatrixXcd pauli_rotation_matrix(const std::string& letters, double angle) {
  const Eigen::MatrixXcd p = kron_letters(letters);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(p.rows(), p.cols());
  return std::cos(angle / 2) * id - Complex(0, std::sin(angle / 2)) * p;
}

/// Global-phase-insensitive distance 1 - |<a|b>|.
inline double phase_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return 1.0 - std::abs(a.dot(b));
}

}  // namespace oracle
