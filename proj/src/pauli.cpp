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

#include "hydrovqe/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace hvqe {

namespace {

std::uint64_t mask_for(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same_width(const PauliString& a, const PauliString& b,
                      const char* what) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()) + ")");
  }
}

int letter_code(std::uint64_t x, std::uint64_t z, int q) {
  const int xb = static_cast<int>((x >> q) & 1U);
  const int zb = static_cast<int>((z >> q) & 1U);
  // (x,z): I=(0,0)->0, X=(1,0)->1, Y=(1,1)->2, Z=(0,1)->3
  return xb ? 1 + zb : 3 * zb;
}

}  // namespace

char to_char(PauliLetter l) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(l)];
}

Complex phase_unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z,
                         int phase)
    : n_qubits_(n_qubits), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count " +
                                std::to_string(n_qubits) + " out of range");
  }
  if (((x | z) & ~mask_for(n_qubits)) != 0) {
    throw std::invalid_argument("PauliString: letter bits beyond qubit count");
  }
}

PauliString PauliString::from_letters(std::string_view letters, int phase) {
  const int n = static_cast<int>(letters.size());
  if (n > kMaxQubits) {
    throw std::invalid_argument("PauliString: too many letters");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (std::toupper(static_cast<unsigned char>(letters[q]))) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" +
                                    std::string(1, letters[q]) + "'");
    }
  }
  return {n, x, z, phase};
}

PauliString PauliString::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  const auto space = text.find_first_of(" \t");
  if (space == std::string_view::npos) {
    return from_letters(text);
  }
  const std::string_view prefix = text.substr(0, space);
  const std::string_view letters = trim(text.substr(space));
  int phase = 0;
  if (prefix == "+" || prefix == "+1" || prefix == "1") {
    phase = 0;
  } else if (prefix == "-" || prefix == "-1") {
    phase = 2;
  } else if (prefix == "+i" || prefix == "i") {
    phase = 1;
  } else if (prefix == "-i") {
    phase = 3;
  } else {
    throw std::invalid_argument("PauliString: bad phase prefix '" +
                                std::string(prefix) + "'");
  }
  return from_letters(letters, phase);
}

PauliString PauliString::single(int n_qubits, int q, PauliLetter l) {
  if (q < 0 || q >= n_qubits) {
    throw std::out_of_range("PauliString::single: qubit out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << q;
  const bool has_x = l == PauliLetter::X || l == PauliLetter::Y;
  const bool has_z = l == PauliLetter::Z || l == PauliLetter::Y;
  return {n_qubits, has_x ? bit : 0, has_z ? bit : 0, 0};
}

PauliLetter PauliString::letter(int q) const {
  return static_cast<PauliLetter>(letter_code(x_, z_, q));
}

std::string PauliString::letters() const {
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) {
    s[static_cast<std::size_t>(q)] = to_char(letter(q));
  }
  return s;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[] = {"+1", "+i", "-1", "-i"};
  return std::string(kPrefix[phase_]) + " " + letters();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_width(a, b, "multiply");
  const std::uint64_t x1 = a.x_bits(), z1 = a.z_bits();
  const std::uint64_t x2 = b.x_bits(), z2 = b.z_bits();
  const std::uint64_t xa = x1 & ~z1, ya = x1 & z1, za = ~x1 & z1;
  const std::uint64_t xb = x2 & ~z2, yb = x2 & z2, zb = ~x2 & z2;
  // XY=iZ, YZ=iX, ZX=iY; reversed orders pick up -i.
  const std::uint64_t pos = (xa & yb) | (ya & zb) | (za & xb);
  const std::uint64_t neg = (xa & zb) | (ya & xb) | (za & yb);
  const int k = a.phase() + b.phase() + std::popcount(pos) -
                std::popcount(neg);
  return {a.n_qubits(), x1 ^ x2, z1 ^ z2, k};
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  check_same_width(a, b, "qubitwise_commutes");
  const std::uint64_t differ =
      (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
  return (a.support() & b.support() & differ) == 0;
}

bool general_commutes(const PauliString& a, const PauliString& b) {
  check_same_width(a, b, "general_commutes");
  const std::uint64_t anti =
      (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(anti) & 1) == 0;
}

bool LetterOrder::operator()(const PauliString& a, const PauliString& b) const {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  const std::uint64_t differ =
      (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
  if (differ == 0) return a.phase() < b.phase();
  const int q = std::countr_zero(differ);
  return letter_code(a.x_bits(), a.z_bits(), q) <
         letter_code(b.x_bits(), b.z_bits(), q);
}

WeightedPauliSum::WeightedPauliSum(int n_qubits, double drop_tolerance)
    : n_qubits_(n_qubits), drop_tolerance_(drop_tolerance) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("WeightedPauliSum: qubit count out of range");
  }
}

void WeightedPauliSum::add(const PauliString& p, Complex coefficient) {
  if (p.n_qubits() != n_qubits_) {
    throw std::invalid_argument("WeightedPauliSum::add: qubit count mismatch");
  }
  const Complex c = coefficient * p.phase_value();
  if (hermitian_ && std::abs(c.imag()) > 1e-10) hermitian_ = false;
  auto [it, inserted] = terms_.try_emplace(p.letters_only(), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < drop_tolerance_) terms_.erase(it);
}

Complex WeightedPauliSum::coefficient(const PauliString& letters) const {
  const auto it = terms_.find(letters.letters_only());
  return it == terms_.end() ? Complex{} : it->second;
}

Complex WeightedPauliSum::identity_coefficient() const {
  return coefficient(PauliString(n_qubits_));
}

std::size_t WeightedPauliSum::non_identity_size() const {
  return terms_.size() -
         (terms_.count(PauliString(n_qubits_)) != 0 ? 1U : 0U);
}

bool WeightedPauliSum::is_real(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

void WeightedPauliSum::mark_hermitian() {
  if (!is_real(1e-10)) {
    throw std::domain_error(
        "WeightedPauliSum: coefficient with imaginary part above 1e-10");
  }
  for (auto& kv : terms_) kv.second = Complex(kv.second.real(), 0.0);
  hermitian_ = true;
}

WeightedPauliSum& WeightedPauliSum::operator+=(const WeightedPauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("WeightedPauliSum: qubit count mismatch");
  }
  const bool both = hermitian_ && other.hermitian_;
  for (const auto& [p, c] : other.terms_) add(p, c);
  hermitian_ = both;
  return *this;
}

WeightedPauliSum& WeightedPauliSum::operator-=(const WeightedPauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("WeightedPauliSum: qubit count mismatch");
  }
  const bool both = hermitian_ && other.hermitian_;
  for (const auto& [p, c] : other.terms_) add(p, -c);
  hermitian_ = both;
  return *this;
}

WeightedPauliSum& WeightedPauliSum::operator*=(Complex s) {
  const bool keep = hermitian_ && s.imag() == 0.0;
  TermMap scaled;
  for (const auto& [p, c] : terms_) {
    const Complex v = c * s;
    if (std::abs(v) >= drop_tolerance_) scaled.emplace(p, v);
  }
  terms_ = std::move(scaled);
  hermitian_ = keep;
  return *this;
}

WeightedPauliSum operator*(const WeightedPauliSum& a,
                           const WeightedPauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("WeightedPauliSum: qubit count mismatch");
  }
  WeightedPauliSum out(a.n_qubits(), a.drop_tolerance());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) out.add(p * q, c * d);
  }
  return out;
}

double WeightedPauliSum::distance(const WeightedPauliSum& other) const {
  double worst = 0.0;
  for (const auto& [p, c] : terms_) {
    worst = std::max(worst, std::abs(c - other.coefficient(p)));
  }
  for (const auto& [p, c] : other.terms_) {
    worst = std::max(worst, std::abs(c - coefficient(p)));
  }
  return worst;
}

std::string to_text(const WeightedPauliSum& h) {
  std::ostringstream out;
  out.precision(17);
  out << "# qubits " << h.n_qubits() << " terms " << h.size() << " hermitian "
      << (h.hermitian() ? 1 : 0) << '\n';
  for (const auto& [p, c] : h.terms()) {
    out << c.real() << ' ' << c.imag() << ' ' << p.letters() << '\n';
  }
  return out.str();
}

WeightedPauliSum parse_pauli_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n_qubits = -1;
  bool hermitian = false;
  WeightedPauliSum h;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string key;
      std::size_t n_terms = 0;
      int flag = 0;
      if (ls >> key && key == "qubits" && n_qubits < 0) {
        ls >> n_qubits >> key >> n_terms >> key >> flag;
        hermitian = flag != 0;
        h = WeightedPauliSum(n_qubits);
      }
      continue;
    }
    double re = 0.0;
    double im = 0.0;
    std::string letters;
    std::istringstream terms(line);
    if (!(terms >> re >> im >> letters)) {
      throw std::invalid_argument("Pauli sum line " + std::to_string(line_no) +
                                  ": expected 're im LETTERS'");
    }
    if (n_qubits < 0) {
      n_qubits = static_cast<int>(letters.size());
      h = WeightedPauliSum(n_qubits);
    }
    if (static_cast<int>(letters.size()) != n_qubits) {
      throw std::invalid_argument("Pauli sum line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(n_qubits) + " letters");
    }
    h.add(PauliString::from_letters(letters), Complex(re, im));
  }
  if (n_qubits < 0) throw std::invalid_argument("Pauli sum: no terms and no header");
  if (hermitian) h.mark_hermitian();
  return h;
}

std::string to_json(const WeightedPauliSum& h) {
  nlohmann::ordered_json j;
  j["n_qubits"] = h.n_qubits();
  j["n_terms"] = h.size();
  j["hermitian"] = h.hermitian();
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [p, c] : h.terms()) {
    terms.push_back({{"letters", p.letters()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return j.dump(2) + "\n";
}

}  // namespace hvqe
