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

#include "hydrovqe/diagonalize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hvqe {

namespace {

constexpr double kLeakTol = 1e-10;

// Terms bucketed by X mask: each bucket maps |b> to a single |b ^ x>.
class XGroupedOperator {
 public:
  explicit XGroupedOperator(const WeightedPauliSum& h) : n_qubits_(h.n_qubits()) {
    std::map<std::uint64_t, std::size_t> where;
    for (const auto& [p, c] : h.terms()) {
      auto [it, fresh] = where.try_emplace(p.x_bits(), buckets_.size());
      if (fresh) buckets_.push_back({p.x_bits(), {}});
      // P|b> = i^{|x&z|} (-1)^{|b&z|} |b^x>
      buckets_[it->second].z_terms.push_back(
          {p.z_bits(), c * phase_unit(std::popcount(p.x_bits() & p.z_bits()))});
    }
  }

  template <typename Visit>
  void column(std::uint64_t b, Visit&& visit) const {
    for (const auto& bucket : buckets_) {
      Complex v = 0.0;
      for (const auto& [z, c] : bucket.z_terms) {
        v += (std::popcount(b & z) & 1) ? -c : c;
      }
      visit(b ^ bucket.x, v);
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(in.size()); ++b) {
      const Complex a = in(static_cast<Eigen::Index>(b));
      if (a == Complex{}) continue;
      column(b, [&](std::uint64_t row, Complex v) {
        out(static_cast<Eigen::Index>(row)) += v * a;
      });
    }
    return out;
  }

  int n_qubits() const { return n_qubits_; }

 private:
  struct Bucket {
    std::uint64_t x;
    std::vector<std::pair<std::uint64_t, Complex>> z_terms;
  };
  int n_qubits_;
  std::vector<Bucket> buckets_;
};

Eigen::MatrixXcd block_matrix(const XGroupedOperator& op,
                              const std::vector<std::uint64_t>& states,
                              const std::vector<std::int64_t>& index_of) {
  const auto d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    op.column(states[static_cast<std::size_t>(col)], [&](std::uint64_t row, Complex v) {
      const std::int64_t r = index_of[row];
      if (r < 0) {
        if (std::abs(v) > kLeakTol) {
          throw std::invalid_argument(
              "Hamiltonian couples the requested sector to another sector");
        }
        return;
      }
      m(r, col) += v;
    });
  }
  return m;
}

// Restarted Lanczos with full reorthogonalization. Each cycle restarts from
// the current Ritz vector; iteration stops on the residual norm.
double lanczos_ground(const XGroupedOperator& op) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << op.n_qubits());
  const int cycle_len = static_cast<int>(std::min<Eigen::Index>(dim, 80));
  constexpr int kMaxCycles = 60;
  Eigen::VectorXcd start(dim);
  // Deterministic, dense start vector.
  for (Eigen::Index i = 0; i < dim; ++i) {
    start(i) = Complex(1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i)),
                       0.25 * std::cos(1.3 * static_cast<double>(i)));
  }
  start.normalize();
  double ritz = std::numeric_limits<double>::infinity();
  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXcd v = start;
    Eigen::VectorXd ritz_vec;
    double residual = 0.0;
    for (int k = 0; k < cycle_len; ++k) {
      basis.push_back(v);
      Eigen::VectorXcd w = op.apply(v);
      alpha.push_back(v.dot(w).real());
      for (const auto& u : basis) w -= u * u.dot(w);
      for (const auto& u : basis) w -= u * u.dot(w);
      const double b = w.norm();
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (int i = 0; i <= k; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i > 0) t(i, i - 1) = t(i - 1, i) = beta[static_cast<std::size_t>(i - 1)];
      }
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      ritz = es.eigenvalues()(0);
      ritz_vec = es.eigenvectors().col(0);
      residual = b * std::abs(ritz_vec(k));
      if (b < 1e-12 || residual < 1e-11 * std::max(1.0, std::abs(ritz))) return ritz;
      beta.push_back(b);
      v = w / b;
    }
    start.setZero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      start += ritz_vec(static_cast<Eigen::Index>(i)) * basis[i];
    }
    start.normalize();
  }
  return ritz;
}

}  // namespace

double exact_ground_energy(const WeightedPauliSum& h, int dense_cap) {
  if (h.n_qubits() > dense_cap) {
    throw std::length_error("exact_ground_energy: " + std::to_string(h.n_qubits()) +
                            " qubits exceeds dense cap " + std::to_string(dense_cap));
  }
  if (!h.hermitian()) {
    throw std::domain_error("exact_ground_energy: Hamiltonian is not Hermitian");
  }
  if (h.n_qubits() <= kDenseSolverQubits) return dense_spectrum(h, dense_cap)(0);
  return lanczos_ground(XGroupedOperator(h));
}

Eigen::VectorXd dense_spectrum(const WeightedPauliSum& h, int dense_cap) {
  const Eigen::MatrixXcd m = to_dense_matrix(h, dense_cap);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

double diagonal_value(const WeightedPauliSum& op, std::uint64_t basis_state) {
  double v = 0.0;
  for (const auto& [p, c] : op.terms()) {
    if (p.x_bits() != 0) {
      throw std::invalid_argument("diagonal_value: operator term " + p.letters() +
                                  " is not diagonal");
    }
    v += ((std::popcount(basis_state & p.z_bits()) & 1) ? -c : c).real();
  }
  return v;
}

Eigen::VectorXd sector_spectrum(const WeightedPauliSum& h,
                                std::span<const SectorConstraint> constraints) {
  if (!h.hermitian()) {
    throw std::domain_error("sector_spectrum: Hamiltonian is not Hermitian");
  }
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits();
  std::vector<std::uint64_t> states;
  std::vector<std::int64_t> index_of(dim, -1);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const bool in = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
      return std::abs(diagonal_value(c.op, b) - c.value) < 1e-8;
    });
    if (in) {
      index_of[b] = static_cast<std::int64_t>(states.size());
      states.push_back(b);
    }
  }
  if (states.empty()) throw std::invalid_argument("sector_spectrum: empty sector");
  const Eigen::MatrixXcd m = block_matrix(XGroupedOperator(h), states, index_of);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

double sector_ground_energy(const WeightedPauliSum& h,
                            std::span<const SectorConstraint> constraints) {
  return sector_spectrum(h, constraints)(0);
}

Eigen::VectorXd block_spectrum(const WeightedPauliSum& h,
                               std::span<const WeightedPauliSum> diagonal_ops) {
  if (!h.hermitian()) {
    throw std::domain_error("block_spectrum: Hamiltonian is not Hermitian");
  }
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits();
  std::map<std::vector<long long>, std::vector<std::uint64_t>> blocks;
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::vector<long long> label;
    for (const auto& op : diagonal_ops) {
      label.push_back(std::llround(diagonal_value(op, b) * 1e6));
    }
    blocks[label].push_back(b);
  }
  const XGroupedOperator op(h);
  std::vector<double> all;
  all.reserve(dim);
  std::vector<std::int64_t> index_of(dim, -1);
  for (const auto& [label, states] : blocks) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      index_of[states[i]] = static_cast<std::int64_t>(i);
    }
    const Eigen::MatrixXcd m = block_matrix(op, states, index_of);
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly)
            .eigenvalues();
    all.insert(all.end(), ev.data(), ev.data() + ev.size());
    for (std::uint64_t s : states) index_of[s] = -1;
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

}  // namespace hvqe
