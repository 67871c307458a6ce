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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wittsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer.
long padic_valuation(const Integer& n, unsigned long p);

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& r, unsigned long p);

bool is_prime(std::uint64_t n);

/// base^exp, throwing std::overflow_error if the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Canonical "num/den" form; integers are written with denominator 1.
std::string to_fraction_string(const Rational& r);

/// Parses "num/den" or "num". Throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

}  // namespace wittsum
