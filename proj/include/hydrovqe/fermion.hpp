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

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hvqe {

struct LadderOp {
  int mode = 0;
  bool creation = false;

  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp cre(int mode) { return {mode, true}; }
inline LadderOp ann(int mode) { return {mode, false}; }

/**
 * Sum of products of fermionic ladder operators over `n_modes` spin orbitals.
 *
 * Every stored product is normal ordered: creations left of annihilations,
 * mode indices ascending within each block, with the reordering sign folded
 * into the coefficient. The empty product holds the scalar term.
 */
class FermionOperatorSum {
 public:
  using Product = std::vector<LadderOp>;
  using TermMap = std::map<Product, std::complex<double>>;

  FermionOperatorSum() = default;
  explicit FermionOperatorSum(int n_modes) : n_modes_(n_modes) {}

  int n_modes() const { return n_modes_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds coefficient * (product), normal ordering with anticommutation.
  void add(const Product& product, std::complex<double> coefficient);
  void add_constant(std::complex<double> c) { add({}, c); }
  std::complex<double> constant() const;

  FermionOperatorSum adjoint() const;
  bool is_hermitian(double tol = 1e-10) const;
  bool is_anti_hermitian(double tol = 1e-10) const;

  FermionOperatorSum& operator+=(const FermionOperatorSum& other);
  FermionOperatorSum& operator-=(const FermionOperatorSum& other);
  FermionOperatorSum& operator*=(std::complex<double> s);
  friend FermionOperatorSum operator+(FermionOperatorSum a,
                                      const FermionOperatorSum& b) {
    return a += b;
  }
  friend FermionOperatorSum operator-(FermionOperatorSum a,
                                      const FermionOperatorSum& b) {
    return a -= b;
  }

  std::string to_string() const;

 private:
  void insert_ordered(Product product, std::complex<double> coefficient);

  int n_modes_ = 0;
  TermMap terms_;
};

}  // namespace hvqe
