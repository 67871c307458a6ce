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
#include "wittsum/artin_hasse.hpp"
#include "wittsum/errors.hpp"

using namespace wittsum;
using wittsum::testing::pt;
using wittsum::testing::make;
using wittsum::testing::term;

namespace {

// exp(sum_{i<=k} x^{p^i} / p^i) by direct exponentiation of the series.
testing::QSeries ah_oracle(std::uint32_t p, std::optional<unsigned> k, unsigned N) {
  testing::QSeries g(N + 1, Rational(0));
  long pi = 1;
  for (unsigned i = 0; pi <= static_cast<long>(N) && (!k || i <= *k); ++i, pi *= p) g[pi] = make_rational(1, pi);
  return testing::series_exp(g, N);
}

}  // namespace

TEST_SUITE("artin_hasse") {
  TEST_CASE("coefficients") {
    const AHSeries s = ah_coefficients(3, 1, 6);
    CHECK(s.u[0] == 1);
    CHECK(s.u[1] == 1);
    CHECK(s.u[3] == make_rational(1, 2));
    for (std::uint32_t p : {3u, 5u}) {
      for (std::optional<unsigned> k : {std::optional<unsigned>{}, std::optional<unsigned>{1}, std::optional<unsigned>{2}}) {
        const auto oracle = ah_oracle(p, k, 30);
        const AHSeries got = ah_coefficients(p, k, 30);
        for (unsigned i = 0; i <= 30; ++i) CHECK(got.u[i] == oracle[i]);
      }
    }
  }

  TEST_CASE("classical integrality and theta bounds") {
    for (std::uint32_t p : {3u, 5u, 7u}) CHECK_NOTHROW(classical_integrality_check(p, 50));
    const auto rows = theta_valuation_bound_check(3, 1, 10);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0].valuation == 0);
    CHECK(rows[3].valuation == make_rational(3, 2));
    CHECK(rows[3].bound == make_rational(2, 3));
    const auto battery = theta_valuation_bound_check(5, 2, 50);
    for (const auto& row : battery) {
      CHECK(row.valuation >= row.bound);
      CHECK(row.u_valuation >= row.u_bound);
    }
    CHECK_THROWS(theta_valuation_bound_check(3, 3, 10));
  }

  TEST_CASE("gamma valuations") {
    CHECK(*gamma_valuation(5, 3, 0).minimum == make_rational(1, 100));
    const ValuationReport r = gamma_valuation(3, 2, 1);
    CHECK(*r.minimum == make_rational(-1, 2));
    CHECK(r.unique_min);
    CHECK(r.terms == 2);
    CHECK(*gamma_valuation(5, 3, 2).minimum == make_rational(-7, 4));
  }

  TEST_CASE("F_{ij,n} analyses") {
    const SumSpec s3 = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    const ValuationReport zero = fijn_valuation_analysis(s3, 0, 0, 0);
    CHECK(zero.minimum == Rational(0));
    CHECK(zero.bound == 0);
    CHECK(zero.achieved);
    const ValuationReport two = fijn_valuation_analysis(s3, 0, 0, 2);
    CHECK(two.minimum == Rational(1));
    CHECK(two.bound == 1);
    CHECK(two.achieved);
    CHECK(two.predicted_equality);
    CHECK(two.unique_min);

    const SumSpec s9 = SumSpec::validate(make(3, 1, 2, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    const ValuationReport one = fijn_valuation_analysis(s9, 0, 0, 1);
    CHECK(one.minimum == make_rational(1, 6));
    CHECK(one.bound == make_rational(1, 6));

    // d = 2 and odd n: bound not achieved.
    const SumSpec d2 = SumSpec::validate(make(5, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 2, {1}), term(0, 1, 1, {2}), term(0, 2, 1, {1})}));
    const ValuationReport odd = fijn_valuation_analysis(d2, 0, 0, 3);
    CHECK_FALSE(odd.predicted_equality);
    CHECK_FALSE(odd.achieved);
    CHECK(*odd.minimum > odd.bound);
    CHECK(odd.terms == 2);  // 2+1 and 1+1+1
    CHECK_THROWS_AS(fijn_valuation_analysis(d2, 0, 0, 40, 5), BudgetExceeded);
  }

  TEST_CASE("F_{j,n} analyses") {
    const SumSpec mixed = SumSpec::validate(make(3, 1, 2, {pt({0}), std::nullopt},
                                                 {term(0, 1, 1, {2}), term(1, 1, 2, {1}), term(1, 2, 1, {1})}));
    CHECK(mixed.dominant_level(0) == 0u);
    for (unsigned n = 0; n <= 9; ++n) {
      const ValuationReport r = fjn_valuation_analysis(mixed, 0, n);
      REQUIRE(r.minimum.has_value());
      CHECK(*r.minimum >= r.bound);
      CHECK(r.bound == make_rational(n, 6));
    }
    CHECK(*fjn_valuation_analysis(mixed, 0, 0).minimum == 0);
    const SumSpec single = SumSpec::validate(make(5, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 2, {1}), term(0, 2, 1, {1})}));
    for (unsigned n = 1; n <= 6; ++n) {
      const ValuationReport a = fjn_valuation_analysis(single, 0, n);
      const ValuationReport b = fijn_valuation_analysis(single, 0, 0, n);
      CHECK(a.minimum == b.minimum);
      CHECK(a.bound == b.bound);
      CHECK(a.achieved == b.achieved);
    }
  }

  TEST_CASE("battery") {
    const AHBatteryResult r = run_ah_battery({});
    CHECK(r.integrality_primes == 3);
    CHECK(r.theta_rows == 3 * 2 * 51);
    CHECK(r.gamma_cases > 0);
  }
}
