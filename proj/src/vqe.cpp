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

#include "hydrovqe/vqe.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hydrovqe/simulator.hpp"

namespace hvqe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Problem build_problem(const SpinOrbitalIntegrals& ints, const EncodingScheme& scheme,
                      const AnsatzSpec& ansatz) {
  Problem p;
  p.integrals = ints;
  p.scheme = scheme;
  p.sector = {ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
  p.hamiltonian = encode(build_hamiltonian(ints), scheme, p.sector);
  if (p.hamiltonian.non_identity_size() > 0) p.plan = greedy_plan(p.hamiltonian);
  p.reference_state = encode_reference_state(scheme, p.sector);
  p.generators =
      encode_generators(build_ucc_generators(ints, ansatz.level), scheme, p.sector);
  p.ansatz = build_ansatz(p.generators, scheme, p.reference_state, ansatz);
  p.sector_constraints = {
      {encode(number_operator(ints.n_spatial(), SpinSector::alpha), scheme, p.sector),
       static_cast<double>(ints.n_alpha())},
      {encode(number_operator(ints.n_spatial(), SpinSector::beta), scheme, p.sector),
       static_cast<double>(ints.n_beta())},
  };
  return p;
}

double sector_exact_energy(const Problem& problem) {
  return sector_ground_energy(problem.hamiltonian, problem.sector_constraints);
}

VQEResult minimize(const WeightedPauliSum& h, const MeasurementPlan& plan,
                   const Circuit& ansatz, const OptimizerSpec& optimizer,
                   const EvaluationMode& mode, std::vector<double> start) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw std::invalid_argument("minimize: Hamiltonian has " +
                                std::to_string(h.n_qubits()) + " qubits, ansatz has " +
                                std::to_string(ansatz.n_qubits()));
  }
  if (!h.hermitian()) throw std::domain_error("minimize: Hamiltonian is not Hermitian");
  if (mode.sampled() && plan.n_qubits != h.n_qubits()) {
    throw std::invalid_argument("minimize: measurement plan width mismatch");
  }
  const auto n_params = static_cast<std::size_t>(ansatz.num_parameters());
  if (start.empty()) start.assign(n_params, 0.0);
  if (start.size() != n_params) {
    throw std::invalid_argument("minimize: start has " + std::to_string(start.size()) +
                                " parameters, ansatz needs " + std::to_string(n_params));
  }
  std::uint64_t eval_index = 0;
  Objective energy = [&](std::span<const double> theta) {
    if (!mode.sampled()) return run(ansatz, theta).expectation(h);
    const std::uint64_t seed = CounterRng::key_for(mode.seed, eval_index++, 0);
    return parallel_energy(plan, ansatz, theta, mode.shots, mode.workers, seed);
  };
  const auto t0 = Clock::now();
  OptimizeResult opt = optimize(energy, std::move(start), optimizer);
  VQEResult r;
  r.wall_seconds = seconds_since(t0);
  r.energy = opt.energy;
  r.params = std::move(opt.params);
  r.eval_count = opt.evals;
  r.converged = opt.converged;
  r.trace = std::move(opt.trace);
  r.metadata["optimizer"] = to_string(optimizer.kind);
  if (optimizer.kind == OptimizerKind::bfgs_numeric_gradient) {
    r.metadata["optimizer_note"] =
        "quasi-Newton BFGS with central-difference gradients, used in place of SLSQP";
  }
  r.metadata["mode"] = mode.sampled() ? "sampled" : "exact";
  if (mode.sampled()) r.metadata["shots_per_group"] = std::to_string(mode.shots);
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> worker_chunks(std::size_t n_groups,
                                                               int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  const auto p = static_cast<std::size_t>(workers);
  const std::size_t chunk = (n_groups + p - 1) / p;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(p);
  for (std::size_t w = 0; w < p; ++w) {
    const std::size_t lo = std::min(n_groups, w * chunk);
    out.emplace_back(lo, std::min(n_groups, lo + chunk));
  }
  return out;
}

double parallel_energy(const MeasurementPlan& plan, const Circuit& circuit,
                       std::span<const double> params, std::uint64_t shots,
                       int workers, std::uint64_t seed) {
  if (!plan.hermitian) throw std::domain_error("parallel_energy: plan is not Hermitian");
  if (plan.n_qubits != circuit.n_qubits()) {
    throw std::invalid_argument("parallel_energy: plan and circuit widths differ");
  }
  const Statevector state = run(circuit, params);
  const std::size_t n_groups = plan.groups.size();
  std::vector<GroupEstimate> partial(n_groups);
  auto evaluate = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t g = lo; g < hi; ++g) {
      partial[g] = shots > 0 ? sample_group(state, plan, g, shots, seed)
                             : GroupEstimate{group_expectation(state, plan, g), 0.0};
    }
  };
  const auto chunks = worker_chunks(n_groups, workers);
  if (workers == 1) {
    evaluate(0, n_groups);
  } else {
    std::vector<std::exception_ptr> errors(chunks.size());
    std::vector<std::thread> pool;
    pool.reserve(chunks.size());
    for (std::size_t w = 0; w < chunks.size(); ++w) {
      const auto [lo, hi] = chunks[w];
      if (lo == hi) continue;
      pool.emplace_back([&, w, lo = lo, hi = hi] {
        try {
          evaluate(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return combine_groups(plan, std::move(partial)).energy;
}

std::vector<ThroughputRow> benchmark_throughput(const MeasurementPlan& plan,
                                                const Circuit& circuit,
                                                std::span<const double> params,
                                                std::uint64_t shots,
                                                std::span<const int> worker_counts,
                                                int evals, std::uint64_t seed) {
  if (evals < 1) throw std::invalid_argument("benchmark: evals must be positive");
  std::vector<ThroughputRow> rows;
  for (int p : worker_counts) {
    ThroughputRow row;
    row.workers = p;
    row.evals = evals;
    const auto t0 = Clock::now();
    for (int k = 0; k < evals; ++k) {
      row.energy = parallel_energy(plan, circuit, params, shots, p, seed);
    }
    row.wall_seconds = seconds_since(t0);
    row.evals_per_hour = row.wall_seconds > 0
                             ? 3600.0 * evals / row.wall_seconds
                             : std::numeric_limits<double>::infinity();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScanRow> scan_dissociation(std::span<const ManifestEntry> manifest,
                                       const ScanOptions& options) {
  std::vector<ScanRow> rows;
  std::optional<SpinOrbitalIntegrals> first;
  std::vector<double> previous;
  for (const auto& entry : manifest) {
    SpinOrbitalIntegrals ints = read_fcidump(entry.fcidump);
    if (first && (ints.n_spatial() != first->n_spatial() ||
                  ints.n_electrons() != first->n_electrons() ||
                  ints.spin_z2() != first->spin_z2())) {
      throw std::invalid_argument("manifest: " + entry.fcidump.string() +
                                  " has a different orbital or electron count");
    }
    if (!first) first = ints;
    if (!options.active_space.empty()) ints = apply_active_space(ints, options.active_space);
    const Problem problem = build_problem(ints, options.scheme, options.ansatz);

    ScanRow row;
    row.bond_length = entry.bond_length;
    row.e_hf = problem.integrals.reference_energy();
    if (problem.n_qubits() <= options.dense_cap) row.e_exact = sector_exact_energy(problem);
    std::vector<double> start;
    if (options.warm_start) start = previous;
    row.result = minimize(problem.hamiltonian, problem.plan, problem.ansatz,
                          options.optimizer, options.mode, start);
    row.e_vqe = row.result.energy;
    previous = row.result.params;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out.precision(12);
  out << "bond_length_angstrom,e_vqe_hartree,e_exact_hartree,e_hf_hartree,n_evals,"
         "wall_seconds\n";
  for (const auto& r : rows) {
    out << r.bond_length << ',' << r.e_vqe << ',';
    if (r.e_exact) out << *r.e_exact;
    out << ',' << r.e_hf << ',' << r.result.eval_count << ',' << r.result.wall_seconds
        << '\n';
  }
  return out.str();
}

std::string scan_to_json(const std::vector<ScanRow>& rows, const ScanOptions& options) {
  nlohmann::ordered_json j;
  j["scheme"] = to_string(options.scheme);
  j["ansatz"] = to_string(options.ansatz.level);
  j["trotter_steps"] = options.ansatz.trotter_steps;
  j["optimizer"] = to_string(options.optimizer.kind);
  j["mode"] = options.mode.sampled() ? "sampled" : "exact";
  j["warm_start"] = options.warm_start;
  auto& points = j["points"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json p;
    p["bond_length_angstrom"] = r.bond_length;
    p["e_vqe_hartree"] = r.e_vqe;
    p["e_exact_hartree"] = r.e_exact ? nlohmann::ordered_json(*r.e_exact) : nullptr;
    p["e_hf_hartree"] = r.e_hf;
    p["n_evals"] = r.result.eval_count;
    p["wall_seconds"] = r.result.wall_seconds;
    p["converged"] = r.result.converged;
    p["params"] = r.result.params;
    p["metadata"] = r.result.metadata;
    auto& trace = p["trace"] = nlohmann::ordered_json::array();
    for (const auto& t : r.result.trace) trace.push_back({t.eval, t.energy, t.best});
    points.push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

std::vector<ScalingPoint> term_count_scaling(const std::filesystem::path& family,
                                             const EncodingScheme& scheme) {
  std::ifstream in(family);
  if (!in) throw std::invalid_argument("cannot open " + family.string());
  std::vector<ScalingPoint> points;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name.front() == '#') continue;
    const SpinOrbitalIntegrals ints = read_fcidump(family.parent_path() / name);
    const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
    const WeightedPauliSum h = encode(build_hamiltonian(ints), scheme, sector);
    points.push_back({name, ints.n_spin_orbitals(), h.size()});
  }
  return points;
}

double loglog_slope(std::span<const ScalingPoint> points) {
  if (points.size() < 2) throw std::invalid_argument("loglog_slope: need two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n_spin_orbitals));
    const double y = std::log(static_cast<double>(p.n_terms));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hvqe
