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

#include "hydrovqe/grouping.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace hvqe {

namespace {

MeasurementPlan empty_plan(const WeightedPauliSum& h) {
  if (h.empty()) throw std::invalid_argument("measurement plan: empty Hamiltonian");
  MeasurementPlan plan;
  plan.n_qubits = h.n_qubits();
  plan.hermitian = h.hermitian();
  for (const auto& [p, c] : h.terms()) {
    if (p.is_identity()) {
      plan.offset += c;
    } else {
      plan.terms.push_back(p);
      plan.coefficients.push_back(c);
    }
  }
  return plan;
}

PauliString merge(const PauliString& a, const PauliString& b) {
  return {a.n_qubits(), a.x_bits() | b.x_bits(), a.z_bits() | b.z_bits()};
}

void finish_group(MeasurementPlan& plan, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  PauliString basis(plan.n_qubits);
  for (std::size_t m : members) basis = merge(basis, plan.terms[m]);
  plan.groups.push_back({basis, std::move(members), rotation_circuit(basis)});
}

// Branch and bound over colourings of the conflict graph, DSATUR order.
class CliqueCoverSearch {
 public:
  CliqueCoverSearch(const std::vector<PauliString>& terms,
                    std::vector<std::vector<std::size_t>> upper)
      : n_(terms.size()), adj_(n_, 0), colour_(n_, -1), best_(std::move(upper)) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && !qubitwise_commutes(terms[i], terms[j])) adj_[i] |= bit(j);
      }
    }
    best_count_ = best_.size();
    lower_ = clique_bound();
  }

  std::vector<std::vector<std::size_t>> solve() {
    if (best_count_ > lower_) search(0);
    return best_;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Size of a greedily grown clique: no cover can use fewer groups.
  std::size_t clique_bound() const {
    std::size_t best = 0;
    for (std::size_t start = 0; start < n_; ++start) {
      std::uint64_t candidates = adj_[start];
      std::size_t size = 1;
      while (candidates != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= adj_[v];
        ++size;
      }
      best = std::max(best, size);
    }
    return best;
  }

  std::size_t pick() const {
    std::size_t chosen = n_;
    int best_sat = -1;
    int best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      int sat = 0;
      for (std::uint64_t m : classes_) sat += (adj_[v] & m) != 0;
      const int deg = std::popcount(adj_[v] & ~coloured_);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        chosen = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return chosen;
  }

  void record() {
    best_count_ = classes_.size();
    best_.assign(classes_.size(), {});
    for (std::size_t v = 0; v < n_; ++v) {
      best_[static_cast<std::size_t>(colour_[v])].push_back(v);
    }
  }

  void search(std::size_t done) {
    if (classes_.size() >= best_count_ || best_count_ == lower_) return;
    if (done == n_) {
      record();
      return;
    }
    const std::size_t v = pick();
    coloured_ |= bit(v);
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      if (adj_[v] & classes_[k]) continue;
      classes_[k] |= bit(v);
      colour_[v] = static_cast<int>(k);
      search(done + 1);
      classes_[k] &= ~bit(v);
    }
    if (classes_.size() + 1 < best_count_) {
      classes_.push_back(bit(v));
      colour_[v] = static_cast<int>(classes_.size() - 1);
      search(done + 1);
      classes_.pop_back();
    }
    colour_[v] = -1;
    coloured_ &= ~bit(v);
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> colour_;
  std::vector<std::uint64_t> classes_;
  std::uint64_t coloured_ = 0;
  std::size_t best_count_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::vector<std::size_t>> best_;
};

}  // namespace

std::size_t MeasurementPlan::n_terms_covered() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.members.size();
  return n;
}

double MeasurementPlan::reduction_factor() const {
  if (groups.empty()) return 1.0;
  return static_cast<double>(terms.size()) / static_cast<double>(groups.size());
}

bool basis_covers(const PauliString& basis, const PauliString& member) {
  const std::uint64_t s = member.support();
  return ((basis.x_bits() ^ member.x_bits()) & s) == 0 &&
         ((basis.z_bits() ^ member.z_bits()) & s) == 0;
}

MeasurementPlan greedy_plan(const WeightedPauliSum& h) {
  MeasurementPlan plan = empty_plan(h);
  const std::size_t n = plan.terms.size();
  std::vector<std::size_t> uncovered(n);
  std::iota(uncovered.begin(), uncovered.end(), 0);
  while (!uncovered.empty()) {
    PauliString best_basis;
    std::size_t best_count = 0;
    for (std::size_t seed : uncovered) {
      PauliString basis = plan.terms[seed];
      std::size_t count = 0;
      for (std::size_t u : uncovered) {
        if (qubitwise_commutes(basis, plan.terms[u])) {
          basis = merge(basis, plan.terms[u]);
          ++count;
        }
      }
      if (count > best_count ||
          (count == best_count && LetterOrder{}(basis, best_basis))) {
        best_count = count;
        best_basis = basis;
      }
    }
    std::vector<std::size_t> members;
    std::vector<std::size_t> rest;
    for (std::size_t u : uncovered) {
      (basis_covers(best_basis, plan.terms[u]) ? members : rest).push_back(u);
    }
    finish_group(plan, std::move(members));
    uncovered = std::move(rest);
  }
  return plan;
}

MeasurementPlan exact_plan(const WeightedPauliSum& h, std::size_t max_terms) {
  MeasurementPlan plan = empty_plan(h);
  if (plan.terms.size() > max_terms) {
    throw std::length_error("exact_plan: " + std::to_string(plan.terms.size()) +
                            " terms exceeds the exhaustive-search cap of " +
                            std::to_string(max_terms));
  }
  if (max_terms > 64) throw std::invalid_argument("exact_plan: cap above 64 terms");
  std::vector<std::vector<std::size_t>> upper;
  for (auto& g : greedy_plan(h).groups) upper.push_back(std::move(g.members));
  auto classes = CliqueCoverSearch(plan.terms, std::move(upper)).solve();
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  for (auto& c : classes) finish_group(plan, std::move(c));
  return plan;
}

Circuit rotation_circuit(const PauliString& basis) {
  Circuit c(basis.n_qubits());
  for (int q = 0; q < basis.n_qubits(); ++q) {
    switch (basis.letter(q)) {
      case PauliLetter::X: c.h(q); break;
      case PauliLetter::Y: c.rx(q, std::numbers::pi / 2); break;
      default: break;
    }
  }
  return c;
}

void validate_plan(const MeasurementPlan& plan) {
  std::vector<int> hits(plan.terms.size(), 0);
  for (const auto& g : plan.groups) {
    for (std::size_t m : g.members) {
      if (m >= plan.terms.size()) throw std::logic_error("plan: bad member index");
      ++hits[m];
      if (!basis_covers(g.basis, plan.terms[m])) {
        throw std::logic_error("plan: basis " + g.basis.letters() +
                               " does not cover " + plan.terms[m].letters());
      }
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] != 1) {
      throw std::logic_error("plan: term " + plan.terms[i].letters() +
                             " covered " + std::to_string(hits[i]) + " times");
    }
  }
}

std::string plan_to_json(const MeasurementPlan& plan) {
  nlohmann::ordered_json j;
  j["n_qubits"] = plan.n_qubits;
  j["n_terms"] = plan.terms.size();
  j["n_groups"] = plan.groups.size();
  j["reduction_factor"] = plan.reduction_factor();
  j["offset"] = plan.offset.real();
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < plan.terms.size(); ++i) {
    nlohmann::ordered_json t;
    t["letters"] = plan.terms[i].letters();
    if (plan.hermitian) {
      t["coefficient"] = plan.coefficients[i].real();
    } else {
      t["coefficient"] = {plan.coefficients[i].real(), plan.coefficients[i].imag()};
    }
    terms.push_back(std::move(t));
  }
  auto& groups = j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : plan.groups) {
    groups.push_back({{"basis", g.basis.letters()}, {"members", g.members}});
  }
  return j.dump(2) + "\n";
}

}  // namespace hvqe
