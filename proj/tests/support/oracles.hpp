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

// Independent reference computations used to cross-check the library.
// Each oracle takes a different route from the code under test.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "wittsum/cyclotomic.hpp"
#include "wittsum/numeric.hpp"

namespace wittsum::testing {

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1) r = r * b % n;
    b = b * b % n;
    e >>= 1;
  }
  return r;
}

/// Teichmuller representative of y in Z/p^m: y^{p^{m-1}}.
inline std::uint64_t teich_mod(std::uint64_t y, std::uint32_t p, unsigned m) {
  std::uint64_t pm = 1, pm1 = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  for (unsigned i = 0; i + 1 < m; ++i) pm1 *= p;
  return powmod(y % p, pm1, pm);
}

/// Prime-field term: level, pole (nullopt = infinity), exponent, coefficient in F_p.
struct PrimeTerm {
  unsigned level;
  std::optional<std::uint32_t> pole;
  unsigned exponent;
  std::uint32_t coeff;
};

/// Character histogram of sum_i p^i Teich(a) Teich(local parameter)^k over
/// x in F_p^x minus the finite poles, by plain modular arithmetic.
inline std::vector<std::uint64_t> prime_field_histogram(std::uint32_t p, unsigned m,
                                                        const std::vector<std::uint32_t>& finite_poles,
                                                        const std::vector<PrimeTerm>& terms) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  std::vector<std::uint64_t> counts(pm, 0);
  for (std::uint32_t x = 1; x < p; ++x) {
    bool skip = false;
    for (auto P : finite_poles) skip = skip || (P % p == x);
    if (skip) continue;
    std::uint64_t value = 0;
    for (const auto& t : terms) {
      std::uint64_t param;
      if (t.pole) {
        const std::uint64_t diff = (x + p - *t.pole % p) % p;
        param = powmod(diff, p - 2, p);
      } else {
        param = x;
      }
      std::uint64_t piece = teich_mod(t.coeff, p, m) * powmod(teich_mod(param, p, m), t.exponent, pm) % pm;
      for (unsigned i = 0; i < t.level; ++i) piece = piece * p % pm;
      value = (value + piece) % pm;
    }
    ++counts[value];
  }
  return counts;
}

/// Number of monic irreducible polynomials of degree n over F_p (necklace count).
inline std::uint64_t necklace_count(std::uint64_t p, unsigned n) {
  auto mobius = [](unsigned d) {
    int mu = 1;
    for (unsigned f = 2; f * f <= d; ++f) {
      if (d % f == 0) {
        d /= f;
        if (d % f == 0) return 0;
        mu = -mu;
      }
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  std::int64_t total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::int64_t pw = 1;
    for (unsigned i = 0; i < n / d; ++i) pw *= static_cast<std::int64_t>(p);
    total += mobius(d) * pw;
  }
  return static_cast<std::uint64_t>(total / n);
}

/// Res(w, Phi_{p^m}) mod ell for a prime ell = 1 mod p^m: the product of w
/// over the primitive p^m-th roots of unity in F_ell (Phi is monic, so
/// Res(w, Phi) = (-1)^{deg w * phi} prod w(beta)).
inline std::uint64_t resultant_mod(const std::vector<Integer>& w, std::uint32_t p, unsigned m, std::uint64_t ell) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  std::uint64_t zeta = 0;
  for (std::uint64_t g = 2; g < ell; ++g) {
    const std::uint64_t c = powmod(g, (ell - 1) / pm, ell);
    if (powmod(c, pm / p, ell) != 1) {
      zeta = c;
      break;
    }
  }
  std::uint64_t prod = 1;
  for (std::uint64_t e = 1; e < pm; ++e) {
    if (e % p == 0) continue;
    const std::uint64_t beta = powmod(zeta, e, ell);
    std::uint64_t val = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      Integer c = w[i] % Integer(static_cast<unsigned long>(ell));
      if (c < 0) c += static_cast<unsigned long>(ell);
      val = (val * beta + c.get_ui()) % ell;
    }
    prod = prod * val % ell;
  }
  std::size_t deg = w.size() - 1;
  const std::uint64_t phi = pm - pm / p;
  if ((deg * phi) % 2 == 1) prod = (ell - prod) % ell;
  return prod;
}

/// Truncated power series over Q.
using QSeries = std::vector<Rational>;

inline QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t n) {
  QSeries r(n + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// exp(g) for g with zero constant term, as sum_k g^k / k!.
inline QSeries series_exp(const QSeries& g, std::size_t n) {
  QSeries result(n + 1, Rational(0));
  QSeries power(n + 1, Rational(0));
  power[0] = 1;
  Rational factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      power = series_mul(power, g, n);
      factorial *= static_cast<long>(k);
    }
    for (std::size_t i = 0; i <= n; ++i) result[i] += power[i] / factorial;
  }
  return result;
}

/// Deterministic generator shared by property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::uint64_t uniform(std::mt19937_64& gen, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen);
}

}  // namespace wittsum::testing
