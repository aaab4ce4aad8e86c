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

#include "hydrovqe/chem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hvqe {

namespace {

constexpr double kSymmetryTol = 1e-10;

}  // namespace

SpinOrbitalIntegrals::SpinOrbitalIntegrals(int n_electrons, int spin_z2,
                                           double core_energy,
                                           Eigen::MatrixXd one_body,
                                           std::vector<double> two_body)
    : n_spatial_(static_cast<int>(one_body.rows())),
      n_electrons_(n_electrons),
      spin_z2_(spin_z2),
      core_energy_(core_energy),
      one_body_(std::move(one_body)),
      two_body_(std::move(two_body)) {
  const int m = n_spatial_;
  if (one_body_.cols() != m) {
    throw std::invalid_argument("integrals: one-body matrix is not square");
  }
  const auto m4 = static_cast<std::size_t>(m) * m * m * m;
  if (two_body_.size() != m4) {
    throw std::invalid_argument("integrals: two-body tensor has " +
                                std::to_string(two_body_.size()) +
                                " entries, expected " + std::to_string(m4));
  }
  if (n_electrons < 0 || ((n_electrons + spin_z2) % 2) != 0 || n_alpha() < 0 ||
      n_beta() < 0 || n_alpha() > m || n_beta() > m) {
    throw std::invalid_argument(
        "integrals: NELEC=" + std::to_string(n_electrons) +
        " and MS2=" + std::to_string(spin_z2) +
        " are inconsistent with NORB=" + std::to_string(m));
  }
  if (m > 0 &&
      (one_body_ - one_body_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw std::invalid_argument("integrals: one-body matrix is not symmetric");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          const double v = spatial_two_body(i, j, k, l);
          const double perms[] = {
              spatial_two_body(j, i, k, l), spatial_two_body(i, j, l, k),
              spatial_two_body(k, l, i, j)};
          for (double w : perms) {
            if (std::abs(v - w) > kSymmetryTol) {
              throw std::invalid_argument(
                  "integrals: two-body tensor breaks eightfold symmetry");
            }
          }
        }
      }
    }
  }
}

double SpinOrbitalIntegrals::one_body(int p, int q) const {
  const int m = n_spatial_;
  if (p / m != q / m) return 0.0;
  return one_body_(p % m, q % m);
}

double SpinOrbitalIntegrals::two_body(int p, int q, int r, int s) const {
  const int m = n_spatial_;
  if (p / m != s / m || q / m != r / m) return 0.0;
  return spatial_two_body(p % m, s % m, q % m, r % m);
}

double SpinOrbitalIntegrals::reference_energy() const {
  const std::uint64_t occ = reference_occupation(n_spatial_, n_alpha(), n_beta());
  std::vector<int> occupied;
  for (int p = 0; p < n_spin_orbitals(); ++p) {
    if ((occ >> p) & 1U) occupied.push_back(p);
  }
  double e = core_energy_;
  for (int p : occupied) e += one_body(p, p);
  for (int p : occupied) {
    for (int q : occupied) {
      e += 0.5 * (two_body(p, q, q, p) - two_body(p, q, p, q));
    }
  }
  return e;
}

SpinOrbitalIntegrals apply_active_space(const SpinOrbitalIntegrals& ints,
                                        const ActiveSpaceSpec& spec) {
  if (spec.empty()) return ints;
  const int m = ints.n_spatial();
  const int n_docc = std::min(ints.n_alpha(), ints.n_beta());
  const int n_occ = std::max(ints.n_alpha(), ints.n_beta());
  std::set<int> frozen;
  std::set<int> removed;
  for (int i : spec.frozen_occupied) {
    if (i < 0 || i >= m) {
      throw std::out_of_range("active space: frozen orbital " +
                              std::to_string(i) + " out of range");
    }
    if (i >= n_docc) {
      throw std::invalid_argument("active space: frozen orbital " +
                                  std::to_string(i) +
                                  " is not doubly occupied in the reference");
    }
    if (!frozen.insert(i).second) {
      throw std::invalid_argument("active space: frozen orbital " +
                                  std::to_string(i) + " listed twice");
    }
  }
  for (int i : spec.removed_virtual) {
    if (i < 0 || i >= m) {
      throw std::out_of_range("active space: removed orbital " +
                              std::to_string(i) + " out of range");
    }
    if (frozen.count(i) != 0) {
      throw std::invalid_argument("active space: orbital " + std::to_string(i) +
                                  " is both frozen and removed");
    }
    if (i < n_occ) {
      throw std::invalid_argument("active space: removed orbital " +
                                  std::to_string(i) +
                                  " is occupied in the reference");
    }
    if (!removed.insert(i).second) {
      throw std::invalid_argument("active space: removed orbital " +
                                  std::to_string(i) + " listed twice");
    }
  }
  std::vector<int> active;
  for (int i = 0; i < m; ++i) {
    if (frozen.count(i) == 0 && removed.count(i) == 0) active.push_back(i);
  }

  const Eigen::MatrixXd& h = ints.spatial_one_body();
  auto g = [&ints](int i, int j, int k, int l) {
    return ints.spatial_two_body(i, j, k, l);
  };
  double core = ints.core_energy();
  for (int i : frozen) {
    core += 2.0 * h(i, i);
    for (int j : frozen) core += 2.0 * g(i, i, j, j) - g(i, j, j, i);
  }
  const int ma = static_cast<int>(active.size());
  Eigen::MatrixXd h_act(ma, ma);
  for (int a = 0; a < ma; ++a) {
    for (int b = 0; b < ma; ++b) {
      const int p = active[static_cast<std::size_t>(a)];
      const int q = active[static_cast<std::size_t>(b)];
      double v = h(p, q);
      for (int i : frozen) v += 2.0 * g(p, q, i, i) - g(p, i, i, q);
      h_act(a, b) = v;
    }
  }
  std::vector<double> g_act(static_cast<std::size_t>(ma) * ma * ma * ma);
  std::size_t idx = 0;
  for (int a : active) {
    for (int b : active) {
      for (int c : active) {
        for (int d : active) g_act[idx++] = g(a, b, c, d);
      }
    }
  }
  const int n_e = ints.n_electrons() - 2 * static_cast<int>(frozen.size());
  return {n_e, ints.spin_z2(), core, std::move(h_act), std::move(g_act)};
}

FermionOperatorSum build_hamiltonian(const SpinOrbitalIntegrals& ints) {
  const int n = ints.n_spin_orbitals();
  FermionOperatorSum h(n);
  h.add_constant(ints.core_energy());
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double v = ints.one_body(p, q);
      if (v != 0.0) h.add({cre(p), ann(q)}, v);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          const double v = ints.two_body(p, q, r, s);
          if (v != 0.0) h.add({cre(p), cre(q), ann(r), ann(s)}, 0.5 * v);
        }
      }
    }
  }
  return h;
}

FermionOperatorSum number_operator(int n_spatial, SpinSector sector) {
  FermionOperatorSum n_op(2 * n_spatial);
  const int first = sector == SpinSector::beta ? n_spatial : 0;
  const int last = sector == SpinSector::alpha ? n_spatial : 2 * n_spatial;
  for (int p = first; p < last; ++p) n_op.add({cre(p), ann(p)}, 1.0);
  return n_op;
}

UccLevel parse_ucc_level(std::string_view s) {
  if (s == "uccs" || s == "UCCS") return UccLevel::uccs;
  if (s == "uccsd" || s == "UCCSD") return UccLevel::uccsd;
  throw std::invalid_argument("unknown ansatz level '" + std::string(s) +
                              "' (expected uccs or uccsd)");
}

std::string to_string(UccLevel level) {
  return level == UccLevel::uccs ? "uccs" : "uccsd";
}

std::uint64_t reference_occupation(int n_spatial, int n_alpha, int n_beta) {
  std::uint64_t occ = 0;
  for (int i = 0; i < n_alpha; ++i) occ |= std::uint64_t{1} << i;
  for (int i = 0; i < n_beta; ++i) occ |= std::uint64_t{1} << (n_spatial + i);
  return occ;
}

UccGenerators build_ucc_generators(const SpinOrbitalIntegrals& ints,
                                   UccLevel level) {
  if (ints.spin_z2() != 0) {
    throw std::invalid_argument(
        "UCC generators: open-shell reference (MS2 != 0) is not supported");
  }
  const int m = ints.n_spatial();
  const int n = ints.n_spin_orbitals();
  UccGenerators out;
  if (ints.n_electrons() == 0) {
    out.diagnostic = "no electrons in the active space; ansatz is empty";
    return out;
  }
  if (ints.n_alpha() == m && ints.n_beta() == m) {
    out.diagnostic = "no virtual orbitals in the active space; ansatz is empty";
    return out;
  }
  std::vector<int> occ[2];
  std::vector<int> vir[2];
  const int n_occ[2] = {ints.n_alpha(), ints.n_beta()};
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < m; ++i) (i < n_occ[s] ? occ[s] : vir[s]).push_back(i + s * m);
  }
  auto emit = [&](std::vector<int> o, std::vector<int> v) {
    ExcitationGenerator g{FermionOperatorSum(n), static_cast<int>(out.generators.size()),
                          o, v};
    FermionOperatorSum::Product t;
    FermionOperatorSum::Product t_dag;
    for (int a : v) t.push_back(cre(a));
    for (auto it = o.rbegin(); it != o.rend(); ++it) t.push_back(ann(*it));
    for (int i : o) t_dag.push_back(cre(i));
    for (auto it = v.rbegin(); it != v.rend(); ++it) t_dag.push_back(ann(*it));
    g.generator.add(t, 1.0);
    g.generator.add(t_dag, -1.0);
    out.generators.push_back(std::move(g));
  };
  for (int s = 0; s < 2; ++s) {
    for (int i : occ[s]) {
      for (int a : vir[s]) emit({i}, {a});
    }
  }
  if (level == UccLevel::uccsd) {
    auto same_spin = [&](int s) {
      for (std::size_t x = 0; x < occ[s].size(); ++x) {
        for (std::size_t y = x + 1; y < occ[s].size(); ++y) {
          for (std::size_t u = 0; u < vir[s].size(); ++u) {
            for (std::size_t w = u + 1; w < vir[s].size(); ++w) {
              emit({occ[s][x], occ[s][y]}, {vir[s][u], vir[s][w]});
            }
          }
        }
      }
    };
    same_spin(0);
    for (int i : occ[0]) {
      for (int j : occ[1]) {
        for (int a : vir[0]) {
          for (int b : vir[1]) emit({i, j}, {a, b});
        }
      }
    }
    same_spin(1);
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FcidumpError("cannot open manifest " + path.string(), 0);
  }
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    ManifestEntry e;
    std::string file;
    if (!(ls >> e.bond_length)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw FcidumpError("manifest: expected bond length", line_no);
    }
    if (!(ls >> file)) {
      throw FcidumpError("manifest: missing FCIDUMP path", line_no);
    }
    e.fcidump = file;
    if (e.fcidump.is_relative()) e.fcidump = path.parent_path() / e.fcidump;
    entries.push_back(std::move(e));
  }
  if (entries.empty()) {
    throw FcidumpError("manifest " + path.string() + " has no entries", 0);
  }
  return entries;
}

}  // namespace hvqe
