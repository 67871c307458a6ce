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

#include "wittsum/numeric.hpp"

#include <limits>
#include <stdexcept>

#include "wittsum/errors.hpp"

namespace wittsum {

long padic_valuation(const Integer& n, unsigned long p) {
  if (n == 0) throw std::invalid_argument("padic_valuation: zero has infinite valuation");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long padic_valuation(const Rational& r, unsigned long p) {
  return padic_valuation(Integer(r.get_num()), p) - padic_valuation(Integer(r.get_den()), p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("checked_pow: result exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      r = Rational(Integer(s));
    } else {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw ValidationError("zero denominator in rational '" + s + "'");
      r = Rational(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational '" + s + "'");
  }
  return r;
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace wittsum
