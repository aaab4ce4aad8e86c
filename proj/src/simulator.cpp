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

#include "hydrovqe/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hvqe {

namespace {

constexpr std::uint64_t kShotBlock = std::uint64_t{1} << 16;

inline double parity_sign(std::uint64_t b, std::uint64_t mask) {
  return (std::popcount(b & mask) & 1) ? -1.0 : 1.0;
}

}  // namespace

Statevector::Statevector(int n_qubits, std::uint64_t basis_state)
    : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw std::invalid_argument("Statevector: unsupported qubit count " +
                                std::to_string(n_qubits));
  }
  if (basis_state >= dimension()) {
    throw std::invalid_argument("Statevector: basis state outside register");
  }
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension()));
  amps_(static_cast<Eigen::Index>(basis_state)) = 1.0;
}

Eigen::Matrix2cd gate_matrix(GateKind kind, double angle) {
  using namespace std::complex_literals;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::h: m << 1, 1, 1, -1; m /= std::numbers::sqrt2; break;
    case GateKind::x: m << 0, 1, 1, 0; break;
    case GateKind::y: m << 0, -1i, 1i, 0; break;
    case GateKind::z: m << 1, 0, 0, -1; break;
    case GateKind::rx: m << c, -1i * s, -1i * s, c; break;
    case GateKind::ry: m << c, -s, s, c; break;
    case GateKind::rz: m << std::exp(-0.5i * angle), 0, 0, std::exp(0.5i * angle); break;
    case GateKind::phase: m << 1, 0, 0, std::exp(1i * angle); break;
    default: throw std::invalid_argument("gate_matrix: not a single-qubit gate");
  }
  return m;
}

void Statevector::apply_single(int q, const Eigen::Matrix2cd& u) {
  const std::uint64_t step = std::uint64_t{1} << q;
  const std::uint64_t dim = dimension();
  Complex* a = amps_.data();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t hi = 0; hi < dim; hi += 2 * step) {
    for (std::uint64_t i = hi; i < hi + step; ++i) {
      const Complex x0 = a[i];
      const Complex x1 = a[i + step];
      a[i] = u00 * x0 + u01 * x1;
      a[i + step] = u10 * x0 + u11 * x1;
    }
  }
}

void Statevector::apply_cx(int control, int target) {
  const std::uint64_t c = std::uint64_t{1} << control;
  const std::uint64_t t = std::uint64_t{1} << target;
  Complex* a = amps_.data();
  for (std::uint64_t i = 0; i < dimension(); ++i) {
    if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
  }
}

void Statevector::apply_pauli_rotation(const PauliString& p, double angle) {
  if (p.n_qubits() != n_qubits_) {
    throw std::invalid_argument("Pauli rotation: width mismatch");
  }
  const double c = std::cos(angle / 2);
  const Complex ms(0.0, -std::sin(angle / 2));
  Complex* a = amps_.data();
  const std::uint64_t x = p.x_bits();
  if (x == 0) {
    for (std::uint64_t b = 0; b < dimension(); ++b) {
      a[b] *= c + ms * p.act(b).second;
    }
    return;
  }
  // P|b> = f(b)|b^x>, so each pair (b, b^x) mixes independently.
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::uint64_t b = 0; b < dimension(); ++b) {
    if (b & pivot) continue;
    const std::uint64_t b2 = b ^ x;
    const Complex f_b = p.act(b).second;    // P|b>  = f_b |b2>
    const Complex f_b2 = p.act(b2).second;  // P|b2> = f_b2 |b>
    const Complex v = a[b];
    const Complex w = a[b2];
    a[b] = c * v + ms * f_b2 * w;
    a[b2] = c * w + ms * f_b * v;
  }
}

void Statevector::apply(const Gate& g, std::span<const double> params) {
  const double angle = g.resolved_angle(params);
  switch (g.kind) {
    case GateKind::cx: apply_cx(g.control, g.target); break;
    case GateKind::pauli_rotation: apply_pauli_rotation(g.pauli, angle); break;
    default: apply_single(g.target, gate_matrix(g.kind, angle)); break;
  }
}

void Statevector::apply(const Circuit& c, std::span<const double> params) {
  if (c.n_qubits() != n_qubits_) {
    throw std::invalid_argument("Statevector: circuit width mismatch");
  }
  for (const Gate& g : c.gates()) apply(g, params);
}

Complex Statevector::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_qubits_) {
    throw std::invalid_argument("expectation: width mismatch");
  }
  const Complex* a = amps_.data();
  Complex acc = 0.0;
  for (std::uint64_t b = 0; b < dimension(); ++b) {
    const auto [b2, f] = p.act(b);
    acc += std::conj(a[b2]) * f * a[b];
  }
  return acc;
}

double Statevector::expectation(const WeightedPauliSum& h) const {
  if (h.n_qubits() != n_qubits_) {
    throw std::invalid_argument("expectation: Hamiltonian acts on " +
                                std::to_string(h.n_qubits()) + " qubits, state has " +
                                std::to_string(n_qubits_));
  }
  Complex acc = 0.0;
  for (const auto& [p, c] : h.terms()) acc += c * expectation(p);
  return acc.real();
}

Statevector run(const Circuit& c, std::span<const double> params,
                std::uint64_t initial_state, int qubit_cap) {
  if (c.n_qubits() > qubit_cap) {
    throw std::length_error("run: " + std::to_string(c.n_qubits()) +
                            " qubits exceeds the cap of " + std::to_string(qubit_cap));
  }
  const int n_params = c.num_parameters();
  if (static_cast<int>(params.size()) != n_params) {
    throw std::invalid_argument("run: circuit has " + std::to_string(n_params) +
                                " parameter slots but " +
                                std::to_string(params.size()) + " values were given");
  }
  Statevector s(c.n_qubits(), initial_state);
  s.apply(c, params);
  return s;
}

double expectation(const Circuit& c, std::span<const double> params,
                   const WeightedPauliSum& h) {
  if (!h.hermitian()) {
    throw std::domain_error("expectation: Hamiltonian is not marked Hermitian");
  }
  return run(c, params).expectation(h);
}

double group_expectation(const Statevector& state, const MeasurementPlan& plan,
                         std::size_t g) {
  const MeasurementGroup& group = plan.groups.at(g);
  Statevector rotated = state;
  rotated.apply(group.rotation);
  const Eigen::VectorXd p = rotated.probabilities();
  double total = 0.0;
  for (std::size_t m : group.members) {
    const std::uint64_t mask = plan.terms[m].support();
    double e = 0.0;
    for (std::uint64_t b = 0; b < state.dimension(); ++b) {
      e += p(static_cast<Eigen::Index>(b)) * parity_sign(b, mask);
    }
    total += plan.coefficients[m].real() * e;
  }
  return total;
}

double plan_expectation(const Statevector& state, const MeasurementPlan& plan) {
  if (!plan.hermitian) {
    throw std::domain_error("plan_expectation: plan is not Hermitian");
  }
  if (plan.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("plan_expectation: width mismatch");
  }
  double energy = plan.offset.real();
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    energy += group_expectation(state, plan, g);
  }
  return energy;
}

GroupEstimate sample_group(const Statevector& state, const MeasurementPlan& plan,
                           std::size_t g, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  if (!plan.hermitian) throw std::domain_error("sample: plan is not Hermitian");
  const MeasurementGroup& group = plan.groups.at(g);
  Statevector rotated = state;
  rotated.apply(group.rotation);
  const Eigen::VectorXd p = rotated.probabilities();
  const std::uint64_t dim = state.dimension();
  std::vector<double> cdf(dim);
  std::vector<double> value(dim, 0.0);
  double running = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) {
    running += p(static_cast<Eigen::Index>(b));
    cdf[b] = running;
    for (std::size_t m : group.members) {
      value[b] += plan.coefficients[m].real() * parity_sign(b, plan.terms[m].support());
    }
  }
  // Welford accumulation of the per-shot estimator.
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t k = 0;
  for (std::uint64_t block = 0; k < shots; ++block) {
    CounterRng rng(CounterRng::key_for(seed, g, block));
    const std::uint64_t stop = std::min(shots, k + kShotBlock);
    for (; k < stop; ++k) {
      const double u = rng.uniform() * running;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      const double v = value[static_cast<std::size_t>(it - cdf.begin())];
      const double delta = v - mean;
      mean += delta / static_cast<double>(k + 1);
      m2 += delta * (v - mean);
    }
  }
  const double var = shots > 1 ? m2 / static_cast<double>(shots - 1) : 0.0;
  return {mean, var / static_cast<double>(shots)};
}

SampledEnergy combine_groups(const MeasurementPlan& plan,
                             std::vector<GroupEstimate> groups) {
  SampledEnergy out;
  out.energy = plan.offset.real();
  double var = 0.0;
  for (const auto& g : groups) {
    out.energy += g.mean;
    var += g.variance;
  }
  out.standard_error = std::sqrt(var);
  out.groups = std::move(groups);
  return out;
}

SampledEnergy sample(const Circuit& c, std::span<const double> params,
                     const MeasurementPlan& plan, std::uint64_t shots_per_group,
                     std::uint64_t seed) {
  if (shots_per_group == 0) {
    throw std::invalid_argument("sample: shots must be positive");
  }
  const Statevector state = run(c, params);
  std::vector<GroupEstimate> groups;
  groups.reserve(plan.groups.size());
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    groups.push_back(sample_group(state, plan, g, shots_per_group, seed));
  }
  return combine_groups(plan, std::move(groups));
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::key_for(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t block) {
  constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  return mix(mix(mix(seed + kGamma) + stream * kGamma) + block * kGamma);
}

std::uint64_t CounterRng::next() {
  return mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace hvqe
