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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "hydrovqe/fidelity.hpp"
#include "hydrovqe/vqe.hpp"
#include "oracles.hpp"

using namespace hvqe;

namespace {

const ErrorRates kCurrent{1e-3, 1e-2, 1e-2};

long double direct_product(const GateCounts& c, const ErrorRates& r) {
  return std::pow(1.0L - r.e_g1, static_cast<long double>(c.g1)) *
         std::pow(1.0L - r.e_g2, static_cast<long double>(c.g2)) *
         std::pow(1.0L - r.e_q, static_cast<long double>(c.q));
}

GateCounts h2_counts(UccLevel level) {
  const auto ints = read_fcidump(oracle::fixture("h2/h2_0.7414.fcidump"));
  const Problem p = build_problem(ints, {EncodingKind::parity, true}, {level, 1});
  return transpile_and_count(p.ansatz);
}

}  // namespace

TEST_CASE("worked values") {
  CHECK(fidelity(GateCounts{123, 45, 6}, ErrorRates{}) == 1.0);
  const double f = fidelity(GateCounts{10, 5, 2}, kCurrent);
  CHECK(f == doctest::Approx(0.9228).epsilon(1e-4));
  CHECK(f == doctest::Approx(std::pow(0.999, 10) * std::pow(0.99, 7)).epsilon(1e-14));
  CHECK(fidelity(GateCounts{0, 0, 0}, ErrorRates{0.5, 0.5, 0.5}) == 1.0);
}

TEST_CASE("log space agrees with the direct product") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> rate(0.0, 0.05);
  for (std::int64_t scale : {1LL, 100LL, 10'000LL, 1'000'000LL}) {
    for (int trial = 0; trial < 25; ++trial) {
      const GateCounts c{static_cast<std::int64_t>(rng() % (scale + 1)),
                         static_cast<std::int64_t>(rng() % (scale + 1)),
                         static_cast<int>(rng() % 100)};
      const ErrorRates r{rate(rng) * 1e-2, rate(rng) * 1e-2, rate(rng)};
      const long double want = direct_product(c, r);
      const double got = fidelity(c, r);
      if (want > 0) {
        CHECK(std::abs((got - want) / want) < 1e-12);
      }
      CHECK(std::abs(fidelity<long double>(c, r) - want) <= 1e-12L * want);
    }
  }
  // Large exponents underflow gracefully instead of producing NaN.
  const double tiny = fidelity(GateCounts{1'000'000, 1'000'000, 100}, ErrorRates{0.1, 0.1, 0.1});
  CHECK(tiny >= 0.0);
  CHECK(std::isfinite(tiny));
}

TEST_CASE("G2 doubling identity") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 500);
    const GateCounts once{static_cast<std::int64_t>(rng() % 200), k, 4};
    GateCounts twice = once;
    twice.g2 = 2 * k;
    const double ratio = fidelity(twice, kCurrent) / fidelity(once, kCurrent);
    CHECK(ratio == doctest::Approx(std::pow(1.0 - kCurrent.e_g2, static_cast<double>(k)))
                       .epsilon(1e-12));
  }
}

TEST_CASE("strict monotonicity") {
  const GateCounts base{20, 8, 3};
  const double f = fidelity(base, kCurrent);
  CHECK(fidelity(GateCounts{21, 8, 3}, kCurrent) < f);
  CHECK(fidelity(GateCounts{20, 9, 3}, kCurrent) < f);
  CHECK(fidelity(GateCounts{20, 8, 4}, kCurrent) < f);
  CHECK(fidelity(base, ErrorRates{2e-3, 1e-2, 1e-2}) < f);
  CHECK(fidelity(base, ErrorRates{1e-3, 2e-2, 1e-2}) < f);
  CHECK(fidelity(base, ErrorRates{1e-3, 1e-2, 2e-2}) < f);
  CHECK(f > 0.0);
  CHECK(f <= 1.0);
}

TEST_CASE("sweeps") {
  const GateCounts c{8, 4, 2};
  const auto one = sweep(c, RateGrid{{1e-3}, {1e-2}, {1e-2}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].fidelity == fidelity(c, kCurrent));

  const RateGrid grid{{0.0, 1e-3, 1e-2}, {0.0, 5e-3, 1e-2, 5e-2}, {0.0, 1e-2}};
  const auto rows = sweep(c, grid);
  REQUIRE(rows.size() == 24);
  CHECK(rows[0].rates.e_q == 0.0);
  CHECK(rows[1].rates.e_q == 1e-2);
  CHECK(rows[1].rates.e_g2 == 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto& a = rows[i].rates;
      const auto& b = rows[j].rates;
      if (a.e_g1 <= b.e_g1 && a.e_g2 <= b.e_g2 && a.e_q <= b.e_q) {
        CHECK(rows[i].fidelity >= rows[j].fidelity);
      }
    }
  }
  const std::string csv = sweep_to_csv(rows);
  CHECK(csv.rfind("e_g1,e_g2,e_q,fidelity\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);
  const auto j = nlohmann::json::parse(sweep_to_json(c, rows));
  CHECK(j.at("rows").size() == 24);
  CHECK(j.at("counts").at("g2") == 4);

  CHECK_THROWS_AS(fidelity(c, ErrorRates{1.0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(c, ErrorRates{-0.1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(GateCounts{-1, 0, 0}, kCurrent), std::invalid_argument);
}

TEST_CASE("singles-only ansatz is cheaper than singles and doubles") {
  const GateCounts s = h2_counts(UccLevel::uccs);
  const GateCounts sd = h2_counts(UccLevel::uccsd);
  MESSAGE("UCCS ", s.g1, "/", s.g2, "/", s.q, "  UCCSD ", sd.g1, "/", sd.g2, "/", sd.q);
  CHECK(s.q == sd.q);
  CHECK(s.g2 < sd.g2);
  CHECK(fidelity(s, kCurrent) > fidelity(sd, kCurrent));
}
