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

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace hvqe {

using Complex = std::complex<double>;

/// Maximum register width for the packed x/z representation.
inline constexpr int kMaxQubits = 64;

/// Coefficients with magnitude below this are dropped from Pauli sums.
inline constexpr double kDefaultDropTolerance = 1e-12;

/// Largest register for which a full 2^n x 2^n matrix may be requested.
inline constexpr int kDefaultDenseCap = 16;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);

/// Returns i^k for k taken modulo 4.
Complex phase_unit(int k);

/**
 * A phase-weighted tensor product of single-qubit Pauli letters.
 *
 * Letters are stored symplectically: bit q of `x` and `z` encodes the letter
 * on qubit q as I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). The operator is
 * i^phase * P_0 (x) P_1 (x) ... with each P_q Hermitian. Qubit 0 is the least
 * significant bit of every basis-state index.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, int phase = 0);

  /// Letters given qubit-0-first, e.g. "XZIY".
  static PauliString from_letters(std::string_view letters, int phase = 0);

  /// Parses the text rendering produced by to_string(), e.g. "+i XZY".
  static PauliString parse(std::string_view text);

  /// Single letter `l` on qubit `q`, identity elsewhere.
  static PauliString single(int n_qubits, int q, PauliLetter l);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  /// Exponent k of the phase i^k, in [0, 4).
  int phase() const { return phase_; }
  Complex phase_value() const { return phase_unit(phase_); }

  PauliLetter letter(int q) const;
  std::uint64_t support() const { return x_ | z_; }
  int weight() const { return std::popcount(support()); }
  bool is_identity() const { return support() == 0; }

  /// Same letters with phase +1.
  PauliString letters_only() const { return {n_qubits_, x_, z_, 0}; }
  PauliString with_phase(int k) const { return {n_qubits_, x_, z_, k}; }

  std::string letters() const;
  std::string to_string() const;

  /**
   * Action on a computational basis state: P|b> = factor * |b ^ x>.
   * factor = i^(phase + |x&z|) * (-1)^|b&z|.
   */
  std::pair<std::uint64_t, Complex> act(std::uint64_t basis_state) const {
    const int k = phase_ + std::popcount(x_ & z_) +
                  2 * (std::popcount(basis_state & z_) & 1);
    return {basis_state ^ x_, phase_unit(k)};
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Canonical product a*b with accumulated phase.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

/// True iff on every qubit the letters agree or at least one is I.
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

/// True iff the operators commute (even number of anticommuting positions).
bool general_commutes(const PauliString& a, const PauliString& b);

/// Strict weak order: lexicographic by letters qubit-0-first with I<X<Y<Z,
/// ties broken by phase.
struct LetterOrder {
  bool operator()(const PauliString& a, const PauliString& b) const;
};

/**
 * Weighted sum of Pauli strings with at most one term per letter sequence.
 * Phases of inserted strings are folded into the coefficients, so every key
 * has phase +1. Iteration order is lexicographic by letters.
 */
class WeightedPauliSum {
 public:
  using TermMap = std::map<PauliString, Complex, LetterOrder>;

  WeightedPauliSum() = default;
  explicit WeightedPauliSum(int n_qubits,
                            double drop_tolerance = kDefaultDropTolerance);

  int n_qubits() const { return n_qubits_; }
  double drop_tolerance() const { return drop_tolerance_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add(const PauliString& p, Complex coefficient = 1.0);
  Complex coefficient(const PauliString& letters) const;
  Complex identity_coefficient() const;

  /// Number of terms excluding the all-I term.
  std::size_t non_identity_size() const;

  bool hermitian() const { return hermitian_; }
  /// Verifies every coefficient is real within 1e-10, zeroes the imaginary
  /// parts and sets the flag. Throws std::domain_error otherwise.
  void mark_hermitian();
  bool is_real(double tol = 1e-10) const;

  WeightedPauliSum& operator+=(const WeightedPauliSum& other);
  WeightedPauliSum& operator-=(const WeightedPauliSum& other);
  WeightedPauliSum& operator*=(Complex s);
  friend WeightedPauliSum operator+(WeightedPauliSum a,
                                    const WeightedPauliSum& b) {
    return a += b;
  }
  friend WeightedPauliSum operator-(WeightedPauliSum a,
                                    const WeightedPauliSum& b) {
    return a -= b;
  }
  friend WeightedPauliSum operator*(Complex s, WeightedPauliSum a) {
    return a *= s;
  }

  /// Operator product with like terms merged.
  friend WeightedPauliSum operator*(const WeightedPauliSum& a,
                                    const WeightedPauliSum& b);

  /// Max |coefficient difference| over the union of terms.
  double distance(const WeightedPauliSum& other) const;

 private:
  int n_qubits_ = 0;
  double drop_tolerance_ = kDefaultDropTolerance;
  bool hermitian_ = false;
  TermMap terms_;
};

/**
 * Text table, one "re im LETTERS" line per term in letter order, preceded
 * by a "# qubits N terms T hermitian B" header. parse_pauli_sum reads it
 * back; "#" lines other than the header are comments.
 */
std::string to_text(const WeightedPauliSum& h);
WeightedPauliSum parse_pauli_sum(std::string_view text);
std::string to_json(const WeightedPauliSum& h);

/// Sum of coefficient-weighted Kronecker products; qubit 0 is the least
/// significant index bit.
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>
to_dense_matrix(const WeightedPauliSum& h, int dense_cap = kDefaultDenseCap) {
  if (h.n_qubits() > dense_cap) {
    throw std::length_error("to_dense_matrix: " + std::to_string(h.n_qubits()) +
                            " qubits exceeds dense cap " +
                            std::to_string(dense_cap));
  }
  using C = std::complex<Scalar>;
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits();
  Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>::Zero(
          static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : h.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto [row, f] = p.act(b);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) +=
          C(static_cast<Scalar>((c * f).real()),
            static_cast<Scalar>((c * f).imag()));
    }
  }
  return m;
}

}  // namespace hvqe
