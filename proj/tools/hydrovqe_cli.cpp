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

// Batch entry point: encode, plan, circuit, scan, fidelity, bench.
// Data goes to stdout (or the configured files), diagnostics to stderr.
// Exit codes: 0 success, 2 input error, 3 numeric failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydrovqe/config.hpp"
#include "hydrovqe/fidelity.hpp"
#include "hydrovqe/grouping.hpp"
#include "hydrovqe/transpile.hpp"
#include "hydrovqe/vqe.hpp"

namespace fs = std::filesystem;
using namespace hvqe;

namespace {

constexpr int kInputError = 2;
constexpr int kNumericError = 3;

struct MoleculeArgs {
  std::string fcidump;
  std::string scheme = "parity";
  std::optional<bool> taper;
  std::vector<int> freeze;
  std::vector<int> remove;

  void attach(CLI::App* app, bool fcidump_required = true) {
    auto* opt = app->add_option("--fcidump", fcidump, "FCIDUMP integral file");
    if (fcidump_required) opt->required();
    app->add_option("--scheme", scheme, "jordan_wigner | parity | bravyi_kitaev");
    app->add_flag("--taper,!--no-taper", taper,
                  "remove the two parity qubits (parity only; default on for parity)");
    app->add_option("--freeze", freeze, "spatial orbitals to freeze (comma list)")
        ->delimiter(',');
    app->add_option("--remove", remove, "virtual spatial orbitals to drop (comma list)")
        ->delimiter(',');
  }

  EncodingScheme encoding() const {
    EncodingScheme s;
    s.kind = parse_encoding_kind(scheme);
    s.taper_two_qubits = taper.value_or(s.kind == EncodingKind::parity);
    return s;
  }

  SpinOrbitalIntegrals integrals() const {
    SpinOrbitalIntegrals ints = read_fcidump(fcidump);
    const ActiveSpaceSpec active{freeze, remove};
    return active.empty() ? ints : apply_active_space(ints, active);
  }
};

void emit(const fs::path& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << content;
}

fs::path molecule_for(const RunConfig& config) {
  if (!config.fcidump.empty()) return config.fcidump;
  if (!config.manifest.empty()) {
    const auto entries = read_manifest(config.manifest);
    if (!entries.empty()) return entries.front().fcidump;
  }
  throw ConfigError("config: needs 'fcidump' or a nonempty 'manifest'");
}

int cmd_encode(const MoleculeArgs& mol, const std::string& format,
               const std::string& scaling) {
  if (!scaling.empty()) {
    const auto points = term_count_scaling(scaling, mol.encoding());
    std::ostringstream out;
    out << "name,n_spin_orbitals,n_terms\n";
    for (const auto& p : points) {
      out << p.name << ',' << p.n_spin_orbitals << ',' << p.n_terms << '\n';
    }
    std::cout << out.str();
    std::cerr << "log-log slope of terms vs spin orbitals: " << loglog_slope(points) << '\n';
    return 0;
  }
  if (mol.fcidump.empty()) throw std::invalid_argument("encode: --fcidump is required");
  const SpinOrbitalIntegrals ints = mol.integrals();
  const EncodingScheme scheme = mol.encoding();
  const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
  const WeightedPauliSum h = encode(build_hamiltonian(ints), scheme, sector);
  std::cout << (format == "json" ? to_json(h) : to_text(h));
  std::cerr << to_string(scheme) << ": " << h.n_qubits() << " qubits, " << h.size()
            << " terms\n";
  return 0;
}

int cmd_plan(const MoleculeArgs& mol, const std::string& hamiltonian, bool exact,
             const std::string& format) {
  WeightedPauliSum h;
  if (!hamiltonian.empty()) {
    std::ifstream in(hamiltonian);
    if (!in) throw std::invalid_argument("cannot open " + hamiltonian);
    std::ostringstream text;
    text << in.rdbuf();
    h = parse_pauli_sum(text.str());
  } else if (!mol.fcidump.empty()) {
    const SpinOrbitalIntegrals ints = mol.integrals();
    const Sector sector{ints.n_spin_orbitals(), ints.n_electrons(), ints.spin_z2()};
    h = encode(build_hamiltonian(ints), mol.encoding(), sector);
  } else {
    throw std::invalid_argument("plan: give --fcidump or --hamiltonian");
  }
  const MeasurementPlan greedy = greedy_plan(h);
  std::optional<MeasurementPlan> optimal;
  if (exact) optimal = exact_plan(h);
  if (format == "json") {
    auto j = nlohmann::ordered_json::parse(plan_to_json(greedy));
    if (optimal) j["exact_groups"] = optimal->groups.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "naive_terms " << greedy.terms.size() << '\n'
              << "greedy_groups " << greedy.groups.size() << '\n'
              << "reduction_factor " << greedy.reduction_factor() << '\n';
    if (optimal) std::cout << "exact_groups " << optimal->groups.size() << '\n';
  }
  return 0;
}

int cmd_circuit(const MoleculeArgs& mol, const std::string& level, int trotter,
                bool transpiled, bool counts, bool raw_singles) {
  const Problem p = build_problem(mol.integrals(), mol.encoding(),
                                  {parse_ucc_level(level), trotter});
  const auto mode = raw_singles ? SingleQubitCounting::raw : SingleQubitCounting::fused;
  if (counts) {
    std::cout << to_json(transpile_and_count(p.ansatz, mode));
  } else {
    std::cout << to_text(transpiled ? transpile(p.ansatz) : p.ansatz);
  }
  return 0;
}

int cmd_scan(RunConfig config) {
  if (config.manifest.empty()) throw ConfigError("scan: config needs 'manifest'");
  const auto manifest = read_manifest(config.manifest);
  const ScanOptions options = config.scan_options();
  const auto rows = scan_dissociation(manifest, options);
  emit(config.output_csv, scan_to_csv(rows));
  if (!config.output_json.empty()) emit(config.output_json, scan_to_json(rows, options));
  for (const auto& r : rows) {
    if (!r.result.converged) {
      std::cerr << "warning: optimizer stopped at its evaluation budget at "
                << r.bond_length << " A\n";
    }
  }
  return 0;
}

int cmd_fidelity(const RunConfig& config, bool raw_singles) {
  SpinOrbitalIntegrals ints = read_fcidump(molecule_for(config));
  if (!config.active_space.empty()) ints = apply_active_space(ints, config.active_space);
  const Problem p = build_problem(ints, config.scheme, config.ansatz);
  const GateCounts counts = transpile_and_count(
      p.ansatz, raw_singles ? SingleQubitCounting::raw : SingleQubitCounting::fused);
  const auto rows = sweep(counts, config.rates);
  emit(config.output_csv, sweep_to_csv(rows));
  if (!config.output_json.empty()) emit(config.output_json, sweep_to_json(counts, rows));
  std::cerr << "gate counts " << to_json(counts);
  return 0;
}

int cmd_bench(const RunConfig& config) {
  SpinOrbitalIntegrals ints = read_fcidump(molecule_for(config));
  if (!config.active_space.empty()) ints = apply_active_space(ints, config.active_space);
  const Problem p = build_problem(ints, config.scheme, config.ansatz);
  const std::vector<double> params(static_cast<std::size_t>(p.n_parameters()), 0.05);
  const auto rows = benchmark_throughput(p.plan, p.ansatz, params, config.shots,
                                         config.bench_workers, config.bench_evals,
                                         config.seed);
  std::ostringstream out;
  out.precision(12);
  out << "workers,groups,evals,wall_seconds,evals_per_hour,energy\n";
  for (const auto& r : rows) {
    out << r.workers << ',' << p.plan.groups.size() << ',' << r.evals << ','
        << r.wall_seconds << ',' << r.evals_per_hour << ',' << r.energy << '\n';
  }
  emit(config.output_csv, out.str());
  return 0;
}

struct ConfigArgs {
  std::string path;
  std::optional<int> workers;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::string csv;
  std::string json;

  void attach(CLI::App* app) {
    app->add_option("config", path, "JSON run configuration")->required();
    app->add_option("--workers", workers, "worker threads (0 = all cores)");
    app->add_option("--shots", shots, "shots per measurement group (0 = exact)");
    app->add_option("--seed", seed, "sampling seed");
    app->add_option("--csv", csv, "CSV output path (default stdout)");
    app->add_option("--json", json, "JSON output path");
  }

  RunConfig load() const {
    RunConfig c = load_config(path);
    if (workers) c.workers = *workers;
    if (shots) c.shots = *shots;
    if (seed) c.seed = *seed;
    if (!csv.empty()) c.output_csv = csv;
    if (!json.empty()) c.output_json = json;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydrovqe: molecular Hamiltonians, measurement plans and VQE emulation"};
  app.require_subcommand(1);

  MoleculeArgs mol;
  std::string format = "text";
  std::string scaling;
  auto* encode_cmd = app.add_subcommand("encode", "encode a Hamiltonian onto qubits");
  mol.attach(encode_cmd, false);
  encode_cmd->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  encode_cmd->add_option("--scaling", scaling,
                         "family file listing FCIDUMPs; prints term counts per size");

  std::string hamiltonian;
  bool exact = false;
  auto* plan_cmd = app.add_subcommand("plan", "group terms into measurement bases");
  mol.attach(plan_cmd, false);
  plan_cmd->add_option("--hamiltonian", hamiltonian, "Pauli sum in the encode text format");
  plan_cmd->add_flag("--exact", exact, "also report the optimal group count (<= 20 terms)");
  plan_cmd->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string level = "uccsd";
  int trotter = 1;
  bool transpiled = false;
  bool counts = false;
  bool raw_singles = false;
  auto* circuit_cmd = app.add_subcommand("circuit", "dump the UCC ansatz circuit");
  mol.attach(circuit_cmd);
  circuit_cmd->add_option("--level", level, "uccs | uccsd");
  circuit_cmd->add_option("--trotter-steps", trotter)->check(CLI::PositiveNumber);
  circuit_cmd->add_flag("--transpiled", transpiled, "expand Pauli exponentials");
  circuit_cmd->add_flag("--counts", counts, "print transpiled gate counts as JSON");
  circuit_cmd->add_flag("--raw-singles", raw_singles,
                        "count every single-qubit gate instead of fused runs");

  ConfigArgs cfg;
  bool no_warm_start = false;
  auto* scan_cmd = app.add_subcommand("scan", "VQE bond dissociation scan");
  cfg.attach(scan_cmd);
  scan_cmd->add_flag("--no-warm-start", no_warm_start, "start every geometry from zero");

  auto* fidelity_cmd = app.add_subcommand("fidelity", "fidelity sweep over error rates");
  cfg.attach(fidelity_cmd);
  fidelity_cmd->add_flag("--raw-singles", raw_singles,
                         "count every single-qubit gate instead of fused runs");

  auto* bench_cmd = app.add_subcommand("bench", "energy evaluations per hour vs workers");
  cfg.attach(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(mol, format, scaling);
    if (plan_cmd->parsed()) return cmd_plan(mol, hamiltonian, exact, format);
    if (circuit_cmd->parsed()) {
      return cmd_circuit(mol, level, trotter, transpiled, counts, raw_singles);
    }
    if (scan_cmd->parsed()) {
      RunConfig c = cfg.load();
      if (no_warm_start) c.warm_start = false;
      return cmd_scan(std::move(c));
    }
    if (fidelity_cmd->parsed()) return cmd_fidelity(cfg.load(), raw_singles);
    if (bench_cmd->parsed()) return cmd_bench(cfg.load());
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const FcidumpError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return 0;
}
