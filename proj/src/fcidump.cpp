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

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>

#include "hydrovqe/chem.hpp"

namespace hvqe {

namespace {

constexpr double kConflictTol = 1e-10;

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::optional<int> header_int(const std::string& header, const char* key) {
  const std::regex re(std::string("(^|[^A-Z0-9_])") + key + R"(\s*=\s*([-+]?\d+))");
  std::smatch m;
  if (!std::regex_search(header, m, re)) return std::nullopt;
  return std::stoi(m[2].str());
}

bool is_header_end(const std::string& upper_line) {
  if (upper_line.find("&END") != std::string::npos) return true;
  if (upper_line.find("$END") != std::string::npos) return true;
  const auto last = upper_line.find_last_not_of(" \t\r");
  return last != std::string::npos && upper_line[last] == '/';
}

// Fortran writers sometimes emit D exponents.
double parse_value(std::string token, int line_no) {
  std::replace_if(token.begin(), token.end(),
                  [](char c) { return c == 'D' || c == 'd'; }, 'E');
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw FcidumpError("bad numeric value '" + token + "'", line_no);
  }
}

class Slot {
 public:
  explicit Slot(std::size_t n) : value_(n, 0.0), set_(n, 0) {}

  void assign(std::size_t idx, double v, int line_no, const std::string& what) {
    if (set_[idx] && std::abs(value_[idx] - v) > kConflictTol) {
      throw FcidumpError("conflicting duplicate entry for " + what, line_no);
    }
    value_[idx] = v;
    set_[idx] = 1;
  }
  std::vector<double>& values() { return value_; }

 private:
  std::vector<double> value_;
  std::vector<char> set_;
};

}  // namespace

SpinOrbitalIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string header;
  bool in_header = false;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    const std::string u = upper(line);
    if (!in_header) {
      if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto start = u.find("&FCI");
      if (start == std::string::npos) start = u.find("$FCI");
      if (start == std::string::npos) {
        throw FcidumpError("malformed header: expected &FCI namelist", line_no);
      }
      in_header = true;
      header += u.substr(start + 4);
    } else {
      header += " " + u;
    }
    if (is_header_end(u)) header_done = true;
  }
  if (!header_done) {
    throw FcidumpError("malformed header: missing &END terminator", line_no);
  }
  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  const int ms2 = header_int(header, "MS2").value_or(0);
  if (!norb || !nelec) {
    throw FcidumpError("malformed header: NORB and NELEC are required", line_no);
  }
  const int m = *norb;
  if (m < 0 || *nelec < 0) {
    throw FcidumpError("malformed header: negative NORB or NELEC", line_no);
  }
  const auto um = static_cast<std::size_t>(m);
  Slot one(um * um);
  Slot two(um * um * um * um);
  std::optional<double> core;
  auto eri_index = [um](int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)) * um +
            static_cast<std::size_t>(k)) * um + static_cast<std::size_t>(l);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok[6];
    int n_tok = 0;
    while (n_tok < 6 && ls >> tok[n_tok]) ++n_tok;
    if (n_tok == 0) continue;
    if (n_tok != 5) {
      throw FcidumpError("expected 'value i j k l', got " +
                         std::to_string(n_tok) + " fields", line_no);
    }
    const double v = parse_value(tok[0], line_no);
    std::array<int, 4> idx{};
    for (int t = 0; t < 4; ++t) {
      try {
        std::size_t used = 0;
        idx[static_cast<std::size_t>(t)] = std::stoi(tok[t + 1], &used);
        if (used != tok[t + 1].size()) throw std::invalid_argument(tok[t + 1]);
      } catch (const std::exception&) {
        throw FcidumpError("bad orbital index '" + tok[t + 1] + "'", line_no);
      }
      if (idx[static_cast<std::size_t>(t)] < 0 ||
          idx[static_cast<std::size_t>(t)] > m) {
        throw FcidumpError("orbital index " + tok[t + 1] +
                               " out of range for NORB=" + std::to_string(m),
                           line_no);
      }
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core && std::abs(*core - v) > kConflictTol) {
        throw FcidumpError("conflicting duplicate core energy", line_no);
      }
      core = v;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      const std::string what = "h(" + std::to_string(i) + "," + std::to_string(j) + ")";
      one.assign(static_cast<std::size_t>(i - 1) * um + static_cast<std::size_t>(j - 1),
                 v, line_no, what);
      one.assign(static_cast<std::size_t>(j - 1) * um + static_cast<std::size_t>(i - 1),
                 v, line_no, what);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy line; not needed
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      const std::string what = "(" + std::to_string(i) + std::to_string(j) + "|" +
                               std::to_string(k) + std::to_string(l) + ")";
      const int a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      for (const auto& [p, q, r, s] :
           {std::array{a, b, c, d}, std::array{b, a, c, d}, std::array{a, b, d, c},
            std::array{b, a, d, c}, std::array{c, d, a, b}, std::array{d, c, a, b},
            std::array{c, d, b, a}, std::array{d, c, b, a}}) {
        two.assign(eri_index(p, q, r, s), v, line_no, what);
      }
    } else {
      throw FcidumpError("unsupported index pattern " + tok[1] + " " + tok[2] +
                             " " + tok[3] + " " + tok[4],
                         line_no);
    }
  }
  Eigen::MatrixXd h(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      h(p, q) = one.values()[static_cast<std::size_t>(p) * um + static_cast<std::size_t>(q)];
    }
  }
  try {
    return {*nelec, ms2, core.value_or(0.0), std::move(h), std::move(two.values())};
  } catch (const std::invalid_argument& e) {
    throw FcidumpError(e.what(), 0);
  }
}

SpinOrbitalIntegrals parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fcidump(in);
}

SpinOrbitalIntegrals read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open " + path.string(), 0);
  try {
    return parse_fcidump(in);
  } catch (const FcidumpError& e) {
    throw FcidumpError(path.string() + ": " + e.what(), 0);
  }
}

void write_fcidump(std::ostream& out, const SpinOrbitalIntegrals& ints) {
  const int m = ints.n_spatial();
  out << " &FCI NORB=" << m << ",NELEC=" << ints.n_electrons()
      << ",MS2=" << ints.spin_z2() << ",\n  ORBSYM=";
  for (int i = 0; i < m; ++i) out << "1,";
  out << "\n  ISYM=1,\n &END\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = ints.spatial_two_body(i, j, k, l);
          if (v == 0.0) continue;
          out << v << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' '
              << l + 1 << '\n';
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = ints.spatial_one_body()(i, j);
      if (v != 0.0) out << v << ' ' << i + 1 << ' ' << j + 1 << " 0 0\n";
    }
  }
  out << ints.core_energy() << " 0 0 0 0\n";
}

std::string to_fcidump(const SpinOrbitalIntegrals& ints) {
  std::ostringstream os;
  write_fcidump(os, ints);
  return os.str();
}

}  // namespace hvqe
