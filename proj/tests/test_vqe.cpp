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
#include <limits>
#include <numbers>
#include <random>

#include <json.hpp>

#include "hydrovqe/config.hpp"
#include "hydrovqe/simulator.hpp"
#include "hydrovqe/vqe.hpp"
#include "oracles.hpp"

using namespace hvqe;

namespace {

const EncodingScheme kJw{EncodingKind::jordan_wigner, false};
const EncodingScheme kTapered{EncodingKind::parity, true};
constexpr double kChemicalAccuracy = 1.6e-3;

SpinOrbitalIntegrals h2() { return read_fcidump(oracle::fixture("h2/h2_0.7414.fcidump")); }

SpinOrbitalIntegrals lih(const std::string& file) {
  return apply_active_space(read_fcidump(oracle::fixture("lih/" + file)), {{0}, {}});
}

double energy_at(const Problem& p, std::span<const double> params) {
  return expectation(p.ansatz, params, p.hamiltonian);
}

}  // namespace

TEST_CASE("one-parameter cosine landscape") {
  WeightedPauliSum z(1);
  z.add(PauliString::from_letters("Z"), 1.0);
  z.mark_hermitian();
  Circuit c(1);
  c.rotation_slot(GateKind::ry, 0, 0, 1.0);
  for (OptimizerKind kind : {OptimizerKind::bfgs_numeric_gradient, OptimizerKind::nelder_mead,
                             OptimizerKind::spsa}) {
    OptimizerSpec opt;
    opt.kind = kind;
    opt.max_evals = 5000;
    const VQEResult r = minimize(z, greedy_plan(z), c, opt, {}, {0.3});
    CHECK(r.energy == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(std::abs(std::remainder(r.params[0], 2 * std::numbers::pi)) ==
          doctest::Approx(std::numbers::pi).epsilon(2e-3));
  }
}

TEST_CASE("reference state and HF energy") {
  const auto ints = h2();
  const double e_hf = oracle::fixture_record("h2", "h2_0.7414.fcidump").at("e_hf");
  for (EncodingScheme scheme : {kJw, kTapered, EncodingScheme{EncodingKind::bravyi_kitaev, false}}) {
    const Problem p = build_problem(ints, scheme, {});
    CHECK(p.n_parameters() == 3);
    const std::vector<double> zeros(3, 0.0);
    CHECK(energy_at(p, zeros) == doctest::Approx(e_hf).epsilon(1e-10));
    const Statevector s = run(p.ansatz, zeros);
    CHECK(std::norm(s.amplitudes()(static_cast<Eigen::Index>(p.reference_state))) ==
          doctest::Approx(1.0));
  }
  // No generators: the circuit is just the reference preparation.
  EncodedGenerators none{kJw, 4, {}};
  const Circuit prep = build_ansatz(none, kJw, 0b0101, {});
  CHECK(prep.num_parameters() == 0);
  CHECK(std::norm(run(prep, {}).amplitudes()(0b0101)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(build_ansatz(none, kTapered, 0b01, {}), std::invalid_argument);
}

TEST_CASE("H2 UCCSD reaches the exact energy") {
  const auto ints = h2();
  const double fci = oracle::fci_energy(ints);
  for (EncodingScheme scheme : {kJw, kTapered}) {
    const Problem p = build_problem(ints, scheme, {});
    CHECK(sector_exact_energy(p) == doctest::Approx(fci).epsilon(1e-10));
    const VQEResult r = minimize(p.hamiltonian, p.plan, p.ansatz, {}, {});
    CHECK(std::abs(r.energy - fci) < 1e-6);
    CHECK(r.eval_count == static_cast<int>(r.trace.size()));
    CHECK(r.metadata.at("optimizer") == "bfgs_numeric_gradient");
    CHECK(r.metadata.count("optimizer_note") == 1);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(r.trace[i].best <= r.trace[i - 1].best);
    }
    CHECK(r.trace.front().energy == doctest::Approx(energy_at(p, std::vector<double>(3, 0.0))));
  }
}

TEST_CASE("variational bound on random parameters") {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const char* file : {"lih_1.6000.fcidump", "lih_4.0000.fcidump"}) {
    const Problem p = build_problem(lih(file), kTapered, {});
    const double exact = sector_exact_energy(p);
    std::vector<double> theta(static_cast<std::size_t>(p.n_parameters()));
    for (int trial = 0; trial < 50; ++trial) {
      for (double& t : theta) t = angle(rng);
      CHECK(energy_at(p, theta) >= exact - 1e-9);
    }
  }
}

TEST_CASE("central-difference gradients are Richardson consistent") {
  const Problem p = build_problem(h2(), kJw, {});
  const Objective f = [&](std::span<const double> x) { return energy_at(p, x); };
  std::mt19937_64 rng(92);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(3);
    for (double& t : x) t = angle(rng);
    const auto coarse = central_gradient(f, x, 1e-3);
    const auto fine = central_gradient(f, x, 5e-4);
    for (std::size_t k = 0; k < x.size(); ++k) {
      // Richardson extrapolation removes the h^2 term.
      const double extrapolated = (4.0 * fine[k] - coarse[k]) / 3.0;
      const double scale = std::max(1e-3, std::abs(extrapolated));
      CHECK(std::abs(fine[k] - extrapolated) / scale < 1e-5);
    }
  }
}

TEST_CASE("non-finite energies are reported") {
  const Problem p = build_problem(h2(), kJw, {});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(minimize(p.hamiltonian, p.plan, p.ansatz, {}, {}, {nan, 0.0, 0.0}),
                  NumericError);
  const Objective bad = [](std::span<const double>) { return std::nan(""); };
  CHECK_THROWS_AS(optimize(bad, {0.0}, {}), NumericError);
}

TEST_CASE("evaluation budget is respected") {
  const Problem p = build_problem(lih("lih_1.6000.fcidump"), kTapered, {});
  for (OptimizerKind kind : {OptimizerKind::bfgs_numeric_gradient, OptimizerKind::nelder_mead,
                             OptimizerKind::spsa}) {
    OptimizerSpec opt;
    opt.kind = kind;
    opt.max_evals = 37;
    const VQEResult r = minimize(p.hamiltonian, p.plan, p.ansatz, opt, {});
    CHECK(r.eval_count <= 37);
    CHECK_FALSE(r.converged);
  }
  OptimizerSpec bad;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK(parse_optimizer_kind("bfgs") == OptimizerKind::bfgs_numeric_gradient);
  CHECK_THROWS(parse_optimizer_kind("slsqp"));
}

TEST_CASE("parallel evaluation is bit-identical across worker counts") {
  const Problem p = build_problem(lih("lih_1.6000.fcidump"), kTapered, {});
  REQUIRE(p.plan.groups.size() >= 40);
  std::mt19937_64 rng(93);
  std::uniform_real_distribution<double> angle(-0.3, 0.3);
  std::vector<double> theta(static_cast<std::size_t>(p.n_parameters()));
  for (double& t : theta) t = angle(rng);
  for (std::uint64_t shots : {std::uint64_t{0}, std::uint64_t{2000}}) {
    const double serial = parallel_energy(p.plan, p.ansatz, theta, shots, 1, 11);
    for (int workers : {2, 3, 4, 8, 200}) {
      CHECK(parallel_energy(p.plan, p.ansatz, theta, shots, workers, 11) == serial);
    }
    if (shots == 0) CHECK(serial == doctest::Approx(energy_at(p, theta)).epsilon(1e-12));
  }
  CHECK(parallel_energy(p.plan, p.ansatz, theta, 2000, 4, 11) !=
        parallel_energy(p.plan, p.ansatz, theta, 2000, 4, 12));
}

TEST_CASE("worker chunks") {
  for (std::size_t groups : {1u, 7u, 40u, 75u}) {
    for (int workers : {1, 2, 4, 8, 75, 100}) {
      const auto chunks = worker_chunks(groups, workers);
      const std::size_t cap = (groups + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
      std::size_t next = 0;
      // One range per worker; surplus workers get empty ranges.
      CHECK(chunks.size() == static_cast<std::size_t>(workers));
      for (const auto& [lo, hi] : chunks) {
        CHECK(lo == next);
        CHECK(hi >= lo);
        CHECK(hi - lo <= cap);
        next = hi;
      }
      CHECK(next == groups);
    }
  }
  const auto one_each = worker_chunks(75, 75);
  CHECK(one_each.size() == 75);
  for (const auto& [lo, hi] : one_each) CHECK(hi - lo == 1);
  CHECK_THROWS_AS(worker_chunks(10, 0), std::invalid_argument);
}

TEST_CASE("sampled mode converges to the exact energy") {
  const Problem p = build_problem(h2(), kTapered, {});
  const std::vector<double> theta{0.05, -0.02, 0.11};
  const double exact = energy_at(p, theta);
  const SampledEnergy s = sample(p.ansatz, theta, p.plan, 200'000, 3);
  CHECK(std::abs(s.energy - exact) < 5 * s.standard_error);
  OptimizerSpec opt;
  opt.kind = OptimizerKind::spsa;
  opt.max_evals = 400;
  const VQEResult r = minimize(p.hamiltonian, p.plan, p.ansatz, opt, {20000, 1, 5});
  CHECK(r.energy < energy_at(p, std::vector<double>(3, 0.0)) + 5e-3);
}

TEST_CASE("H2 dissociation curve") {
  const auto manifest = read_manifest(oracle::fixture("h2/manifest.txt"));
  REQUIRE(manifest.size() == 8);
  ScanOptions opt;
  opt.scheme = kTapered;
  const auto rows = scan_dissociation(manifest, opt);
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    REQUIRE(row.e_exact.has_value());
    CHECK(std::abs(row.e_vqe - *row.e_exact) <= kChemicalAccuracy);
    CHECK(row.e_vqe >= *row.e_exact - 1e-9);
    CHECK(row.e_vqe <= row.e_hf + 1e-9);
  }
  const std::string csv = scan_to_csv(rows);
  CHECK(csv.rfind("bond_length_angstrom,e_vqe_hartree,e_exact_hartree,e_hf_hartree,n_evals,"
                  "wall_seconds\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  const auto j = nlohmann::json::parse(scan_to_json(rows, opt));
  CHECK(j.dump().find("trace") != std::string::npos);

  const auto single = scan_dissociation(std::span(manifest).subspan(2, 1), opt);
  CHECK(single.size() == 1);
}

TEST_CASE("scan rejects inconsistent manifests") {
  std::vector<ManifestEntry> mixed{{0.74, oracle::fixture("h2/h2_0.7414.fcidump")},
                                   {1.6, oracle::fixture("lih/lih_1.6000.fcidump")}};
  CHECK_THROWS_AS(scan_dissociation(mixed, {}), std::invalid_argument);
}

TEST_CASE("warm starts save evaluations on LiH") {
  const auto manifest = read_manifest(oracle::fixture("lih/manifest.txt"));
  ScanOptions opt;
  opt.active_space = {{0}, {}};
  opt.scheme = kTapered;
  auto total = [](const std::vector<ScanRow>& rows) {
    int n = 0;
    for (const auto& r : rows) n += r.result.eval_count;
    return n;
  };
  const auto warm = scan_dissociation(manifest, opt);
  opt.warm_start = false;
  const auto cold = scan_dissociation(manifest, opt);
  MESSAGE("warm ", total(warm), " cold ", total(cold));
  CHECK(total(warm) < total(cold));
  for (const auto& row : warm) CHECK(std::abs(row.e_vqe - *row.e_exact) <= kChemicalAccuracy);
}

TEST_CASE("term-count scaling fit") {
  std::vector<ScalingPoint> quartic;
  for (int n : {4, 6, 8, 12, 16}) {
    quartic.push_back({"x", n, static_cast<std::size_t>(std::pow(n, 4))});
  }
  CHECK(loglog_slope(quartic) == doctest::Approx(4.0));
  const auto family = term_count_scaling(oracle::fixture("scaling/family.txt"), kJw);
  CHECK(family.size() == 7);
  CHECK(family.front().n_spin_orbitals == 4);
  CHECK(family.back().n_spin_orbitals == 16);
  for (std::size_t i = 1; i < family.size(); ++i) {
    CHECK(family[i].n_terms > family[i - 1].n_terms);
  }
}

TEST_CASE("configuration files") {
  const auto cfg = parse_config(R"({
    "manifest": "lih/manifest.txt",
    "scheme": "jordan_wigner",
    "taper": false,
    "active_space": {"frozen_occupied": [0], "removed_virtual": []},
    "ansatz": {"level": "uccs", "trotter_steps": 2},
    "optimizer": {"kind": "nelder_mead", "max_evals": 500, "tolerance": 1e-6, "seed": 3},
    "shots": 1000,
    "workers": 2,
    "seed": 11,
    "warm_start": false,
    "rates": {"e_g1": [0.0, 0.001], "e_g2": 0.01, "e_q": [0.01, 0.02]},
    "bench": {"workers": [1, 2], "evals": 3},
    "output": {"csv": "out.csv"}
  })",
                                "/data");
  CHECK(cfg.manifest == std::filesystem::path("/data/lih/manifest.txt"));
  CHECK(cfg.scheme == kJw);
  CHECK(cfg.active_space.frozen_occupied == std::vector<int>{0});
  CHECK(cfg.ansatz.level == UccLevel::uccs);
  CHECK(cfg.ansatz.trotter_steps == 2);
  CHECK(cfg.optimizer.kind == OptimizerKind::nelder_mead);
  CHECK(cfg.optimizer.max_evals == 500);
  CHECK(cfg.shots == 1000);
  CHECK(cfg.resolved_workers() == 2);
  CHECK_FALSE(cfg.warm_start);
  CHECK(cfg.rates.e_g1.size() == 2);
  CHECK(cfg.rates.e_g2 == std::vector<double>{0.01});
  CHECK(cfg.bench_workers == std::vector<int>{1, 2});
  CHECK(cfg.output_csv == std::filesystem::path("/data/out.csv"));
  const ScanOptions so = cfg.scan_options();
  CHECK(so.mode.shots == 1000);
  CHECK(so.mode.seed == 11);
  CHECK_FALSE(so.warm_start);

  const auto defaults = parse_config("{}");
  CHECK(defaults.scheme == kTapered);
  CHECK(defaults.optimizer.kind == OptimizerKind::bfgs_numeric_gradient);
  CHECK(defaults.resolved_workers() >= 1);

  CHECK_THROWS_AS(parse_config(R"({"shotz": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"scheme": "qubit"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"optimizer": {"max_evals": 0}})"), std::invalid_argument);
  CHECK_THROWS(parse_config("{not json"));
}
