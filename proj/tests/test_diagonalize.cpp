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

#include <random>

#include "hydrovqe/diagonalize.hpp"
#include "hydrovqe/vqe.hpp"
#include "oracles.hpp"

using namespace hvqe;

namespace {

WeightedPauliSum single(const char* letters, double c = 1.0) {
  WeightedPauliSum h(static_cast<int>(std::string(letters).size()));
  h.add(PauliString::from_letters(letters), c);
  h.mark_hermitian();
  return h;
}

// Real symmetric: every term carries an even number of Y letters.
WeightedPauliSum random_real(std::mt19937_64& rng, int n, int terms) {
  WeightedPauliSum h(n);
  std::normal_distribution<double> g(0.0, 1.0);
  while (static_cast<int>(h.size()) < terms) {
    const std::string l = oracle::random_letters(rng, n, 0.6);
    if (std::count(l.begin(), l.end(), 'Y') % 2) continue;
    h.add(PauliString::from_letters(l), g(rng));
  }
  h.mark_hermitian();
  return h;
}

std::vector<SectorConstraint> electron_sector(const SpinOrbitalIntegrals& ints,
                                              const EncodingScheme& scheme) {
  const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
  return {{encode(number_operator(ints.n_spatial(), SpinSector::alpha), scheme, sector),
           static_cast<double>(ints.n_alpha())},
          {encode(number_operator(ints.n_spatial(), SpinSector::beta), scheme, sector),
           static_cast<double>(ints.n_beta())}};
}

}  // namespace

TEST_CASE("single Paulis") {
  CHECK(exact_ground_energy(single("Z")) == doctest::Approx(-1.0));
  CHECK(exact_ground_energy(single("XX")) == doctest::Approx(-1.0));
  CHECK(exact_ground_energy(single("II", 2.5)) == doctest::Approx(2.5));
  const Eigen::VectorXd s = dense_spectrum(single("ZZ"));
  CHECK(s(0) == doctest::Approx(-1.0));
  CHECK(s(3) == doctest::Approx(1.0));
}

TEST_CASE("dense spectra agree with the oracle matrix") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const WeightedPauliSum h = oracle::random_hermitian(rng, n, 12);
    const Eigen::VectorXd want =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(oracle::dense(h)).eigenvalues();
    CHECK((dense_spectrum(h) - want).norm() < 1e-10);
  }
}

TEST_CASE("H2 at equilibrium") {
  const auto ints = read_fcidump(oracle::fixture("h2/h2_0.7414.fcidump"));
  const double fci = oracle::fixture_record("h2", "h2_0.7414.fcidump").at("e_fci");
  CHECK(fci == doctest::Approx(-1.137).epsilon(1e-3));
  for (EncodingScheme scheme : {EncodingScheme{EncodingKind::jordan_wigner, false},
                                EncodingScheme{EncodingKind::parity, true}}) {
    const Problem p = build_problem(ints, scheme, {});
    CHECK(sector_exact_energy(p) == doctest::Approx(fci).epsilon(1e-9));
    CHECK(exact_ground_energy(p.hamiltonian) <= sector_exact_energy(p) + 1e-12);
  }
}

TEST_CASE("Lanczos matches dense diagonalization beyond the dense solver width") {
  std::mt19937_64 rng(72);
  const int n = kDenseSolverQubits + 1;
  for (int trial = 0; trial < 2; ++trial) {
    const WeightedPauliSum h = random_real(rng, n, 30);
    const Eigen::MatrixXd m = oracle::dense(h).real();
    const double want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly)
                            .eigenvalues()(0);
    const double got = exact_ground_energy(h);
    MESSAGE("lanczos error ", got - want);
    CHECK(std::abs(got - want) < 1e-9);
  }
}

TEST_CASE("sector energies on hydrogen chains") {
  for (const char* name : {"h4.fcidump", "h6.fcidump"}) {
    const auto ints = read_fcidump(oracle::fixture(std::string("scaling/") + name));
    const double want = oracle::fixture_record("scaling", name).at("e_fci");
    CHECK(oracle::fci_energy(ints) == doctest::Approx(want).epsilon(1e-9));
    for (EncodingScheme scheme : {EncodingScheme{EncodingKind::jordan_wigner, false},
                                  EncodingScheme{EncodingKind::bravyi_kitaev, false},
                                  EncodingScheme{EncodingKind::parity, true}}) {
      const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
      const auto q = encode(build_hamiltonian(ints), scheme, sector);
      CHECK(sector_ground_energy(q, electron_sector(ints, scheme)) ==
            doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("block spectrum reassembles the full spectrum") {
  const auto ints = read_fcidump(oracle::fixture("scaling/h3.fcidump"));
  const EncodingScheme jw{EncodingKind::jordan_wigner, false};
  const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
  const auto q = encode(build_hamiltonian(ints), jw, sector);
  const std::vector<WeightedPauliSum> labels{
      encode(number_operator(ints.n_spatial(), SpinSector::alpha), jw, sector),
      encode(number_operator(ints.n_spatial(), SpinSector::beta), jw, sector)};
  CHECK((block_spectrum(q, labels) - dense_spectrum(q)).norm() < 1e-9);
  // A label the Hamiltonian does not conserve is rejected.
  const std::vector<WeightedPauliSum> bad{single("ZIIIII")};
  WeightedPauliSum mixer = q;
  mixer.add(PauliString::from_letters("XIIIII"), 0.1);
  mixer.mark_hermitian();
  CHECK_THROWS_AS(block_spectrum(mixer, bad), std::invalid_argument);
}

TEST_CASE("diagonal values and errors") {
  WeightedPauliSum d(3);
  d.add(PauliString::from_letters("ZII"), 0.5);
  d.add(PauliString::from_letters("IZZ"), 2.0);
  d.add(PauliString::from_letters("III"), 1.0);
  // |b> = qubit 0 set, qubit 1 set: Z0 = -1, Z1 Z2 = -1
  CHECK(diagonal_value(d, 0b011) == doctest::Approx(-1.5));
  CHECK_THROWS_AS(diagonal_value(single("XI"), 0), std::invalid_argument);
  CHECK_THROWS_AS(exact_ground_energy(single("ZZZZZ"), 4), std::length_error);
  WeightedPauliSum nonherm(1);
  nonherm.add(PauliString::from_letters("X"), Complex(0.0, 1.0));
  CHECK_THROWS_AS(exact_ground_energy(nonherm), std::domain_error);
}
