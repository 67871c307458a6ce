/*
 * Copyright 2026 The wittsum Authors
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

#include "doctest.h"
#include "support/battery.hpp"
#include "support/oracles.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/lfunction.hpp"

using namespace wittsum;
using wittsum::testing::pt;
using wittsum::testing::make;
using wittsum::testing::term;

namespace {

EngineOptions one_thread() {
  EngineOptions o;
  o.threads = 1;
  return o;
}

std::vector<CyclotomicNumber> values(const std::vector<SumResult>& sums) {
  std::vector<CyclotomicNumber> out;
  for (const auto& s : sums) out.push_back(s.value);
  return out;
}

}  // namespace

TEST_SUITE("lfunction") {
  TEST_CASE("series recursion base cases") {
    const std::vector<CyclotomicNumber> sums{CyclotomicNumber::integer(3, 1, -1), CyclotomicNumber::integer(3, 1, 7)};
    const auto c = lseries_coefficients(sums);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == CyclotomicNumber::integer(3, 1, 1));
    CHECK(c[1] == sums[0]);
    // c_2 = (S_1^2 + S_2) / 2.
    CHECK(c[2] == CyclotomicNumber::integer(3, 1, 4));
  }

  TEST_CASE("series recursion matches exp of the power series") {
    auto gen = testing::rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<CyclotomicNumber> sums;
      testing::QSeries g(7, Rational(0));
      for (unsigned k = 1; k <= 6; ++k) {
        const Rational s = make_rational(static_cast<long>(testing::uniform(gen, 0, 40)) - 20, static_cast<long>(testing::uniform(gen, 1, 3)));
        sums.push_back(CyclotomicNumber::rational(5, 1, s));
        g[k] = s / static_cast<long>(k);
      }
      const auto expected = testing::series_exp(g, 6);
      const auto c = lseries_coefficients(sums);
      for (unsigned n = 0; n <= 6; ++n) CHECK(c[n].as_rational() == expected[n]);
    }
  }

  TEST_CASE("Kloosterman L-polynomial over F_3") {
    const SumSpec s = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    const LFunctionResult r = lfun_polynomial(s, std::nullopt, one_thread());
    CHECK(r.expected_degree == 2);
    CHECK(r.buffer == 3);
    REQUIRE(r.polynomial.coeffs.size() == 3);
    CHECK(r.polynomial.coeffs[1] == CyclotomicNumber::integer(3, 1, -1));
    CHECK(r.polynomial.coeffs[2] == CyclotomicNumber::integer(3, 1, 3));
    CHECK(r.series.size() == 6);
    CHECK(r.sums.size() == 5);
    CHECK(cf_identity_check(values(r.sums), r.polynomial.coeffs, 3, 5).passed);
  }

  TEST_CASE("degree six instance") {
    const SumSpec s = SumSpec::validate(make(3, 1, 2, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    const LFunctionResult r = lfun_polynomial(s, 1, one_thread());
    CHECK(r.polynomial.degree == 6);
    CHECK_FALSE(r.polynomial.coeffs.back().is_zero());
  }

  TEST_CASE("permissive empty spec gives the trivial-character series") {
    RawSumSpec raw = make(3, 1, 1, {pt({0}), std::nullopt}, {});
    raw.permissive = true;
    const SumSpec s = SumSpec::validate(raw);
    const LFunctionResult r = lfun_polynomial(s, std::nullopt, one_thread());
    CHECK_FALSE(r.polynomial.degree_checked);
    // (1 - s) / (1 - 3s) = 1 + sum_n 2 * 3^{n-1} s^n.
    REQUIRE(r.series.size() == 4);
    CHECK(r.series[0] == CyclotomicNumber::integer(3, 1, 1));
    CHECK(r.series[1] == CyclotomicNumber::integer(3, 1, 2));
    CHECK(r.series[2] == CyclotomicNumber::integer(3, 1, 6));
    CHECK(r.series[3] == CyclotomicNumber::integer(3, 1, 18));
    CHECK(r.polynomial.degree == 3);
  }

  TEST_CASE("degree check fires outside the hypotheses") {
    // Pole at 1 instead of 0: the sum runs over x != 0, 1 and picks up an extra factor.
    const SumSpec s = SumSpec::validate(make(5, 1, 1, {pt({1}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    CHECK_FALSE(s.within_hypotheses());
    CHECK_THROWS_AS(lfun_polynomial(s, std::nullopt, one_thread()), DegreeViolation);
  }

  TEST_CASE("prior sums are reused") {
    const SumSpec s = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    auto prior = sum_sequence(s, 5, one_thread());
    const LFunctionResult r = lfun_polynomial(s, std::nullopt, one_thread(), prior);
    for (std::size_t i = 0; i < prior.size(); ++i) CHECK(r.sums[i].value == prior[i].value);
  }

  TEST_CASE("characteristic-function identity and fault injection") {
    const SumSpec s = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    const LFunctionResult r = lfun_polynomial(s, std::nullopt, one_thread());
    auto sums = values(r.sums);
    CHECK(cf_identity_check(sums, r.polynomial.coeffs, 3, 5).passed);
    sums[1] += CyclotomicNumber::integer(3, 1, 1);
    const auto bad = cf_identity_check(sums, r.polynomial.coeffs, 3, 5);
    CHECK_FALSE(bad.passed);
    CHECK(bad.first_failure == 2u);
    CHECK_THROWS(cf_identity_check(sums, r.polynomial.coeffs, 3, 6));
  }

  TEST_CASE("characteristic series of the trivial sums") {
    // S_k = q^k - 1 gives C(s) = exp(-sum s^k / k) = 1 - s.
    std::vector<CyclotomicNumber> sums;
    for (long k = 1, qk = 5; k <= 4; ++k, qk *= 5) sums.push_back(CyclotomicNumber::integer(5, 1, qk - 1));
    const auto c = characteristic_series(sums, 5);
    CHECK(c[0] == CyclotomicNumber::integer(5, 1, 1));
    CHECK(c[1] == CyclotomicNumber::integer(5, 1, -1));
    for (std::size_t n = 2; n < c.size(); ++n) CHECK(c[n].is_zero());
  }
}
