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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hydrovqe/ansatz.hpp"
#include "hydrovqe/chem.hpp"
#include "hydrovqe/diagonalize.hpp"
#include "hydrovqe/encoding.hpp"
#include "hydrovqe/grouping.hpp"
#include "hydrovqe/optimizer.hpp"

namespace hvqe {

/// Everything derived from one set of integrals under one encoding.
struct Problem {
  SpinOrbitalIntegrals integrals;
  EncodingScheme scheme;
  Sector sector;
  WeightedPauliSum hamiltonian;
  MeasurementPlan plan;
  std::uint64_t reference_state = 0;
  EncodedGenerators generators;
  Circuit ansatz;
  /// Encoded alpha and beta number operators pinned to the reference filling.
  std::vector<SectorConstraint> sector_constraints;

  int n_qubits() const { return hamiltonian.n_qubits(); }
  int n_parameters() const { return static_cast<int>(generators.generators.size()); }
};

Problem build_problem(const SpinOrbitalIntegrals& ints, const EncodingScheme& scheme,
                      const AnsatzSpec& ansatz);

/// Lowest energy with the reference's alpha and beta electron counts.
double sector_exact_energy(const Problem& problem);

struct EvaluationMode {
  /// 0 selects exact statevector energies; otherwise shots per group.
  std::uint64_t shots = 0;
  int workers = 1;
  std::uint64_t seed = 7;

  bool sampled() const { return shots > 0; }
};

struct VQEResult {
  double energy = 0.0;
  std::vector<double> params;
  int eval_count = 0;
  double wall_seconds = 0.0;
  bool converged = false;
  std::vector<TracePoint> trace;
  std::map<std::string, std::string> metadata;
};

/**
 * Minimizes <ansatz(t)|h|ansatz(t)> from `start` (all zeros if empty). In
 * sampled mode evaluation k draws shots with a seed derived from (seed, k).
 */
VQEResult minimize(const WeightedPauliSum& h, const MeasurementPlan& plan,
                   const Circuit& ansatz, const OptimizerSpec& optimizer,
                   const EvaluationMode& mode, std::vector<double> start = {});

/// Half-open group ranges, one per worker, each at most ceil(groups/workers).
std::vector<std::pair<std::size_t, std::size_t>> worker_chunks(std::size_t n_groups,
                                                               int workers);

/**
 * Energy of circuit(params) with the measurement groups split across
 * `workers` threads. With shots == 0 each group is evaluated exactly.
 * Partial sums are combined in group order, so the value is bit-identical
 * for every worker count.
 */
double parallel_energy(const MeasurementPlan& plan, const Circuit& circuit,
                       std::span<const double> params, std::uint64_t shots,
                       int workers, std::uint64_t seed);

struct ThroughputRow {
  int workers = 1;
  int evals = 0;
  double wall_seconds = 0.0;
  double evals_per_hour = 0.0;
  double energy = 0.0;
};

std::vector<ThroughputRow> benchmark_throughput(const MeasurementPlan& plan,
                                                const Circuit& circuit,
                                                std::span<const double> params,
                                                std::uint64_t shots,
                                                std::span<const int> worker_counts,
                                                int evals, std::uint64_t seed);

struct ScanOptions {
  ActiveSpaceSpec active_space;
  EncodingScheme scheme;
  AnsatzSpec ansatz;
  OptimizerSpec optimizer;
  EvaluationMode mode;
  bool warm_start = true;
  int dense_cap = kDefaultDenseCap;
};

struct ScanRow {
  double bond_length = 0.0;
  double e_vqe = 0.0;
  std::optional<double> e_exact;
  double e_hf = 0.0;
  VQEResult result;
};

std::vector<ScanRow> scan_dissociation(std::span<const ManifestEntry> manifest,
                                       const ScanOptions& options);

std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string scan_to_json(const std::vector<ScanRow>& rows, const ScanOptions& options);

struct ScalingPoint {
  std::string name;
  int n_spin_orbitals = 0;
  std::size_t n_terms = 0;
};

/// Encoded term counts for every FCIDUMP listed (one path per line) in
/// `family`.
std::vector<ScalingPoint> term_count_scaling(const std::filesystem::path& family,
                                             const EncodingScheme& scheme);

/// Least-squares slope of log(n_terms) against log(n_spin_orbitals).
double loglog_slope(std::span<const ScalingPoint> points);

}  // namespace hvqe
