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

#include "hydrovqe/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvqe {

namespace {

constexpr double kZero = 1e-14;

}  // namespace

void FermionOperatorSum::add(const Product& product,
                             std::complex<double> coefficient) {
  for (const auto& op : product) {
    if (op.mode < 0 || op.mode >= n_modes_) {
      throw std::out_of_range("FermionOperatorSum: mode " +
                              std::to_string(op.mode) + " outside [0, " +
                              std::to_string(n_modes_) + ")");
    }
  }
  insert_ordered(product, coefficient);
}

// Moves creations left using {a_p, a+_q} = delta_pq, which branches into a
// contracted term whenever p == q. Then sorts each block with sign.
void FermionOperatorSum::insert_ordered(Product product,
                                        std::complex<double> coefficient) {
  for (std::size_t i = 1; i < product.size(); ++i) {
    if (product[i].creation && !product[i - 1].creation) {
      if (product[i].mode == product[i - 1].mode) {
        Product contracted;
        contracted.reserve(product.size() - 2);
        contracted.insert(contracted.end(), product.begin(),
                          product.begin() + static_cast<long>(i) - 1);
        contracted.insert(contracted.end(),
                          product.begin() + static_cast<long>(i) + 1,
                          product.end());
        insert_ordered(std::move(contracted), coefficient);
      }
      std::swap(product[i], product[i - 1]);
      insert_ordered(std::move(product), -coefficient);
      return;
    }
  }
  const auto split = std::find_if(product.begin(), product.end(),
                                  [](const LadderOp& op) { return !op.creation; });
  int sign = 1;
  auto sort_block = [&sign](auto first, auto last) {
    // Insertion sort so every transposition flips the sign once.
    for (auto i = first; i != last; ++i) {
      for (auto j = i; j != first && (j - 1)->mode > j->mode; --j) {
        std::iter_swap(j, j - 1);
        sign = -sign;
      }
    }
    return std::adjacent_find(first, last, [](const LadderOp& a,
                                              const LadderOp& b) {
             return a.mode == b.mode;
           }) == last;
  };
  if (!sort_block(product.begin(), split)) return;
  if (!sort_block(split, product.end())) return;
  auto [it, inserted] =
      terms_.try_emplace(std::move(product), coefficient * double(sign));
  if (!inserted) it->second += coefficient * double(sign);
  if (std::abs(it->second) < kZero) terms_.erase(it);
}

std::complex<double> FermionOperatorSum::constant() const {
  const auto it = terms_.find(Product{});
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

FermionOperatorSum FermionOperatorSum::adjoint() const {
  FermionOperatorSum out(n_modes_);
  for (const auto& [product, c] : terms_) {
    Product rev(product.rbegin(), product.rend());
    for (auto& op : rev) op.creation = !op.creation;
    out.insert_ordered(std::move(rev), std::conj(c));
  }
  return out;
}

bool FermionOperatorSum::is_hermitian(double tol) const {
  const FermionOperatorSum adj = adjoint();
  for (const auto& [product, c] : terms_) {
    const auto it = adj.terms_.find(product);
    const auto d = it == adj.terms_.end() ? std::complex<double>{} : it->second;
    if (std::abs(c - d) > tol) return false;
  }
  return adj.terms_.size() == terms_.size();
}

bool FermionOperatorSum::is_anti_hermitian(double tol) const {
  const FermionOperatorSum adj = adjoint();
  for (const auto& [product, c] : terms_) {
    const auto it = adj.terms_.find(product);
    const auto d = it == adj.terms_.end() ? std::complex<double>{} : it->second;
    if (std::abs(c + d) > tol) return false;
  }
  return adj.terms_.size() == terms_.size();
}

FermionOperatorSum& FermionOperatorSum::operator+=(
    const FermionOperatorSum& other) {
  if (other.n_modes_ > n_modes_) n_modes_ = other.n_modes_;
  for (const auto& [product, c] : other.terms_) insert_ordered(product, c);
  return *this;
}

FermionOperatorSum& FermionOperatorSum::operator-=(
    const FermionOperatorSum& other) {
  if (other.n_modes_ > n_modes_) n_modes_ = other.n_modes_;
  for (const auto& [product, c] : other.terms_) insert_ordered(product, -c);
  return *this;
}

FermionOperatorSum& FermionOperatorSum::operator*=(std::complex<double> s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = std::abs(it->second) < kZero ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

std::string FermionOperatorSum::to_string() const {
  std::ostringstream os;
  os.precision(12);
  for (const auto& [product, c] : terms_) {
    os << '(' << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    os << ')';
    for (const auto& op : product) {
      os << ' ' << op.mode << (op.creation ? "^" : "");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hvqe
