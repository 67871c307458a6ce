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
#include "wittsum/errors.hpp"
#include "wittsum/numeric.hpp"

using namespace wittsum;

TEST_SUITE("numeric") {
  TEST_CASE("p-adic valuation of integers and rationals") {
    CHECK(padic_valuation(Integer(54), 3) == 3);
    CHECK(padic_valuation(Integer(-54), 3) == 3);
    CHECK(padic_valuation(Integer(7), 3) == 0);
    CHECK(padic_valuation(make_rational(5, 18), 3) == -2);
    CHECK(padic_valuation(make_rational(9, 2), 2) == -1);
    CHECK_THROWS(padic_valuation(Integer(0), 3));
  }

  TEST_CASE("primality and checked powers") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
    CHECK(checked_pow(3, 0) == 1);
    CHECK(checked_pow(7, 7) == 823543);
    CHECK(checked_pow(2, 63) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
    CHECK(gcd_u64(12, 18) == 6);
    CHECK(lcm_u64(4, 6) == 12);
  }

  TEST_CASE("rational text round trip") {
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(to_fraction_string(make_rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    for (long n = -20; n <= 20; ++n) {
      for (long d = 1; d <= 7; ++d) {
        const Rational r = make_rational(n, d);
        CHECK(parse_rational(to_fraction_string(r)) == r);
      }
    }
  }
}
