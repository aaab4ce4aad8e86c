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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hydrovqe/grouping.hpp"
#include "hydrovqe/simulator.hpp"
#include "hydrovqe/transpile.hpp"
#include "oracles.hpp"

using namespace hvqe;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd textbook(GateKind kind, double a) {
  Eigen::Matrix2cd m;
  const double c = std::cos(a / 2);
  const double s = std::sin(a / 2);
  switch (kind) {
    case GateKind::h: m << 1, 1, 1, -1; return m / std::sqrt(2.0);
    case GateKind::x: return oracle::letter_matrix('X');
    case GateKind::y: return oracle::letter_matrix('Y');
    case GateKind::z: return oracle::letter_matrix('Z');
    case GateKind::rx: m << c, -1i * s, -1i * s, c; return m;
    case GateKind::ry: m << c, -s, s, c; return m;
    case GateKind::rz: m << std::exp(-0.5i * a), 0, 0, std::exp(0.5i * a); return m;
    case GateKind::phase: m << 1, 0, 0, std::exp(1i * a); return m;
    default: throw std::logic_error("not single-qubit");
  }
}

std::string single_letter(int n, int q, char c) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[static_cast<std::size_t>(q)] = c;
  return s;
}

// Full unitary of a gate built from Kronecker products.
Eigen::MatrixXcd gate_unitary(int n, const Gate& g, std::span<const double> params) {
  const double a = g.resolved_angle(params);
  if (g.kind == GateKind::pauli_rotation) {
    return oracle::pauli_rotation_matrix(g.pauli.letters(), a);
  }
  const auto dim = Eigen::Index{1} << n;
  if (g.kind == GateKind::cx) {
    // |0><0|_c (x) I + |1><1|_c (x) X_t
    const Eigen::MatrixXcd zc = oracle::kron_letters(single_letter(n, g.control, 'Z'));
    const Eigen::MatrixXcd xt = oracle::kron_letters(single_letter(n, g.target, 'X'));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    return 0.5 * (id + zc) + 0.5 * (id - zc) * xt;
  }
  const Eigen::Matrix2cd u = textbook(g.kind, a);
  // Expand u in the Pauli basis and lift each letter to the register.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (char c : std::string("IXYZ")) {
    const Complex w = 0.5 * (oracle::letter_matrix(c).adjoint() * u).trace();
    out += w * oracle::kron_letters(single_letter(n, g.target, c));
  }
  return out;
}

Eigen::VectorXcd oracle_run(const Circuit& c, std::span<const double> params) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << c.n_qubits());
  psi(0) = 1.0;
  for (const Gate& g : c.gates()) psi = gate_unitary(c.n_qubits(), g, params) * psi;
  return psi;
}

Circuit random_circuit(std::mt19937_64& rng, int n, int depth, bool macros) {
  Circuit c(n);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int d = 0; d < depth; ++d) {
    const int q = static_cast<int>(rng() % static_cast<unsigned>(n));
    switch (rng() % (macros ? 9 : 8)) {
      case 0: c.h(q); break;
      case 1: c.x(q); break;
      case 2: c.y(q); break;
      case 3: c.rx(q, angle(rng)); break;
      case 4: c.ry(q, angle(rng)); break;
      case 5: c.rz(q, angle(rng)); break;
      case 6: c.phase(q, angle(rng)); break;
      case 7:
        if (n > 1) c.cx(q, (q + 1 + static_cast<int>(rng() % (n - 1))) % n);
        break;
      default: {
        std::string l = oracle::random_letters(rng, n, 0.3);
        c.pauli_rotation(PauliString::from_letters(l), angle(rng));
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("basic states") {
  Circuit flip(1);
  flip.x(0);
  const Statevector one = run(flip, {});
  CHECK(std::abs(one.amplitudes()(1)) == doctest::Approx(1.0));

  Circuit bell(2);
  bell.h(0).cx(0, 1);
  const Statevector b = run(bell, {});
  CHECK(b.expectation(PauliString::from_letters("ZZ")).real() == doctest::Approx(1.0));
  CHECK(b.expectation(PauliString::from_letters("ZI")).real() == doctest::Approx(0.0).epsilon(1e-14));
  WeightedPauliSum h(2);
  for (const char* l : {"XX", "YY", "ZZ"}) h.add(PauliString::from_letters(l), 1.0);
  h.mark_hermitian();
  // XX = 1, YY = -1, ZZ = 1 on (|00> + |11>)/sqrt2
  CHECK(b.expectation(h) == doctest::Approx(1.0));

  Circuit plus(1);
  plus.h(0).pauli_rotation(PauliString::from_letters("Z"), kPi);
  CHECK(run(plus, {}).expectation(PauliString::from_letters("X")).real() ==
        doctest::Approx(-1.0));
}

TEST_CASE("gate matrices match textbook forms") {
  for (GateKind k : {GateKind::h, GateKind::x, GateKind::y, GateKind::z, GateKind::rx,
                     GateKind::ry, GateKind::rz, GateKind::phase}) {
    for (double a : {0.0, 0.3, -1.7, kPi}) {
      CHECK((gate_matrix(k, a) - textbook(k, a)).norm() < 1e-14);
    }
  }
  CHECK_THROWS_AS(gate_matrix(GateKind::cx, 0.0), std::invalid_argument);
}

TEST_CASE("random circuits agree with the dense oracle") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Circuit c = random_circuit(rng, n, 30, true);
    const Statevector s = run(c, {});
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((s.amplitudes() - oracle_run(c, {})).norm() < 1e-10);
  }
}

TEST_CASE("parameter slots") {
  Circuit c(2);
  c.rotation_slot(GateKind::ry, 0, 0, 1.0).pauli_rotation(PauliString::from_letters("XY"), 1, -0.5);
  CHECK(c.num_parameters() == 2);
  const std::vector<double> params{0.4, 1.1};
  CHECK((run(c, params).amplitudes() - oracle_run(c, params)).norm() < 1e-12);
  CHECK_THROWS_AS(run(c, std::vector<double>{0.1}), std::invalid_argument);
}

TEST_CASE("transpiled macros equal the macros up to global phase") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Circuit c = random_circuit(rng, n, 20, true);
    const Circuit t = transpile(c);
    for (const Gate& g : t.gates()) CHECK(g.kind != GateKind::pauli_rotation);
    CHECK(oracle::phase_distance(run(c, {}).amplitudes(), run(t, {}).amplitudes()) < 1e-9);
  }
  // A parameterized macro keeps its slot through transpilation.
  Circuit p(3);
  p.h(0).h(2).pauli_rotation(PauliString::from_letters("XZY"), 0, -2.0);
  const Circuit tp = transpile(p);
  CHECK(tp.num_parameters() == 1);
  for (double theta : {0.0, 0.37, -2.2}) {
    const std::vector<double> params{theta};
    CHECK(oracle::phase_distance(run(p, params).amplitudes(), run(tp, params).amplitudes()) <
          1e-9);
  }
}

TEST_CASE("gate counts") {
  CHECK(transpile_and_count(Circuit(3)) == GateCounts{0, 0, 3});

  Circuit zz(2);
  zz.pauli_rotation(PauliString::from_letters("ZZ"), 0.3);
  CHECK(transpile_and_count(zz) == GateCounts{1, 2, 2});
  CHECK(transpile_and_count(zz, SingleQubitCounting::raw) == GateCounts{1, 2, 2});

  Circuit xyz(3);
  xyz.pauli_rotation(PauliString::from_letters("XYZ"), 0.3);
  const GateCounts raw = transpile_and_count(xyz, SingleQubitCounting::raw);
  CHECK(raw.g2 == 4);
  CHECK(raw.g1 == 5);  // H, RX in; RZ; H, RX out
  const GateCounts fused = transpile_and_count(xyz);
  CHECK(fused.g2 == 4);
  CHECK(fused.g1 == 5);  // every single-qubit gate is separated by a CX

  // Back-to-back single-qubit gates on one wire fuse into one.
  Circuit run3(1);
  run3.h(0).rz(0, 0.1).h(0);
  CHECK(count_gates(run3).g1 == 1);
  CHECK(count_gates(run3, SingleQubitCounting::raw).g1 == 3);

  // A weight-w macro costs 2(w-1) CX.
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const std::string l = oracle::random_letters(rng, 7, 0.0);
    Circuit c(7);
    c.pauli_rotation(PauliString::from_letters(l), 0.2);
    CHECK(transpile_and_count(c).g2 == 2 * (7 - 1));
  }
  CHECK_THROWS_AS(count_gates(xyz), std::invalid_argument);
}

TEST_CASE("sampling statistics") {
  std::mt19937_64 rng(64);
  Circuit prep = random_circuit(rng, 4, 40, false);
  WeightedPauliSum h(4);
  h.add(PauliString::from_letters("ZZII"), 0.7);
  h.add(PauliString::from_letters("IXXI"), -0.4);
  h.add(PauliString::from_letters("YIIY"), 0.25);
  h.add(PauliString::from_letters("IIIZ"), 0.1);
  h.add(PauliString::from_letters("IIII"), -1.0);
  h.mark_hermitian();
  const MeasurementPlan plan = greedy_plan(h);
  const double exact = expectation(prep, {}, h);

  const SampledEnergy big = sample(prep, {}, plan, 1'000'000, 5);
  CHECK(std::abs(big.energy - exact) < 5.0 * big.standard_error);
  CHECK(big.standard_error < 2e-3);

  // Standard error falls as shots^-1/2.
  const SampledEnergy small = sample(prep, {}, plan, 10'000, 5);
  const double ratio = small.standard_error / big.standard_error;
  CHECK(ratio == doctest::Approx(10.0).epsilon(0.1));

  // Fixed seed, fixed answer.
  CHECK(sample(prep, {}, plan, 1000, 9).energy == sample(prep, {}, plan, 1000, 9).energy);
  CHECK(sample(prep, {}, plan, 1000, 9).energy != sample(prep, {}, plan, 1000, 10).energy);

  // Eigenstates have no shot noise.
  WeightedPauliSum zz(2);
  zz.add(PauliString::from_letters("ZZ"), 1.0);
  zz.mark_hermitian();
  const SampledEnergy one = sample(Circuit(2), {}, greedy_plan(zz), 1, 1);
  CHECK(one.energy == 1.0);
  CHECK(one.standard_error == 0.0);
  CHECK_THROWS_AS(sample(Circuit(2), {}, greedy_plan(zz), 0, 1), std::invalid_argument);
}

TEST_CASE("errors") {
  Circuit c(3);
  CHECK_THROWS_AS(c.cx(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.h(3), std::out_of_range);
  CHECK_THROWS_AS(run(Circuit(25), {}), std::length_error);
  CHECK_THROWS(Statevector(2, 4));
  WeightedPauliSum wide(4);
  wide.add(PauliString::from_letters("ZIII"), 1.0);
  wide.mark_hermitian();
  CHECK_THROWS_AS(expectation(c, {}, wide), std::invalid_argument);
}

TEST_CASE("circuit text round trip") {
  std::mt19937_64 rng(65);
  Circuit c = random_circuit(rng, 4, 25, true);
  c.rotation_slot(GateKind::rz, 2, 0, -0.5).pauli_rotation(PauliString::from_letters("XXYZ"), 1, 0.25);
  CHECK(parse_circuit(to_text(c)) == c);
  CHECK_THROWS(parse_circuit("qubits 2\nfoo 1\n"));
}

TEST_CASE("counter stream") {
  CounterRng a(CounterRng::key_for(7, 3, 0));
  CounterRng b(CounterRng::key_for(7, 3, 0));
  CounterRng other(CounterRng::key_for(7, 4, 0));
  int same = 0;
  double total = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t x = a.next();
    CHECK(x == b.next());
    same += x == other.next();
    total += CounterRng(x).uniform();
  }
  CHECK(same == 0);
  CHECK(total / 10000 == doctest::Approx(0.5).epsilon(0.02));
}
