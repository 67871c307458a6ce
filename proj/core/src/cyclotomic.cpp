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

#include "wittsum/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "wittsum/errors.hpp"

namespace wittsum {
namespace {

std::size_t degree_of(const std::vector<Integer>& a) {
  std::size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  if (d == 0) throw std::invalid_argument("zero polynomial has no degree");
  return d - 1;
}

}  // namespace

std::vector<Integer> cyclotomic_modulus(std::uint32_t p, unsigned m) {
  if (!is_prime(p) || m == 0) throw ValidationError("cyclotomic modulus needs prime p and m >= 1");
  const std::uint64_t step = checked_pow(p, m - 1);
  std::vector<Integer> phi((p - 1) * step + 1, 0);
  for (std::uint32_t i = 0; i < p; ++i) phi[i * step] = 1;
  return phi;
}

Integer resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t n = degree_of(a);
  const std::size_t k = degree_of(b);
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), k);
    return r;
  }
  if (k == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), n);
    return r;
  }
  const std::size_t size = n + k;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  // Rows hold coefficients from the leading term down.
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[r][r + i] = a[n - i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= k; ++i) s[k + r][r + i] = b[k - i];
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c + 1 < size; ++c) {
    if (s[c][c] == 0) {
      std::size_t swap = c + 1;
      while (swap < size && s[swap][c] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(s[c], s[swap]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < size; ++r) {
      for (std::size_t col = c + 1; col < size; ++col) {
        Integer v = s[r][col] * s[c][c] - s[r][c] * s[c][col];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        s[r][col] = std::move(v);
      }
      s[r][c] = 0;
    }
    prev = s[c][c];
  }
  return sign * s[size - 1][size - 1];
}

CyclotomicNumber::CyclotomicNumber(std::uint32_t p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p) || m == 0) throw ValidationError("Q(zeta_{p^m}) needs prime p and m >= 1");
  num_.assign((p - 1) * checked_pow(p, m - 1), 0);
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::uint32_t p, unsigned m, std::vector<Integer> numerator,
                                                   Integer denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  CyclotomicNumber z(p, m);
  const std::uint64_t order = checked_pow(p, m);
  const std::uint64_t step = order / p;
  const std::uint64_t phi = z.num_.size();
  // Fold with zeta^{p^m} = 1.
  std::vector<Integer> folded(std::min<std::uint64_t>(order, std::max<std::size_t>(numerator.size(), 1)), 0);
  for (std::size_t e = 0; e < numerator.size(); ++e) folded[e % order] += numerator[e];
  // zeta^e = -sum_{i<p-1} zeta^{e - phi + i p^{m-1}} for e >= phi.
  for (std::uint64_t e = folded.size(); e-- > phi;) {
    if (folded[e] == 0) continue;
    const Integer c = folded[e];
    folded[e] = 0;
    for (std::uint64_t i = 0; i + 1 < p; ++i) folded[e - phi + i * step] -= c;
  }
  for (std::size_t e = 0; e < std::min<std::size_t>(phi, folded.size()); ++e) z.num_[e] = folded[e];
  z.den_ = std::move(denominator);
  z.normalize();
  return z;
}

CyclotomicNumber CyclotomicNumber::integer(std::uint32_t p, unsigned m, const Integer& n) {
  CyclotomicNumber z(p, m);
  z.num_[0] = n;
  return z;
}

CyclotomicNumber CyclotomicNumber::rational(std::uint32_t p, unsigned m, const Rational& r) {
  CyclotomicNumber z(p, m);
  z.num_[0] = r.get_num();
  z.den_ = r.get_den();
  return z;
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::uint32_t p, unsigned m, std::uint64_t e) {
  std::vector<Integer> v(e % checked_pow(p, m) + 1, 0);
  v.back() = 1;
  return from_polynomial(p, m, std::move(v));
}

CyclotomicNumber CyclotomicNumber::from_histogram(std::uint32_t p, unsigned m,
                                                  const std::vector<std::uint64_t>& counts) {
  if (counts.size() != checked_pow(p, m)) throw std::invalid_argument("histogram length must be p^m");
  std::vector<Integer> v(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) v[c] = Integer(std::to_string(counts[c]));
  return from_polynomial(p, m, std::move(v));
}

void CyclotomicNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CyclotomicNumber::require_same_ring(const CyclotomicNumber& o) const {
  if (p_ != o.p_ || m_ != o.m_) throw std::invalid_argument("cyclotomic numbers from different fields");
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return std::nullopt;
  }
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  require_same_ring(o);
  CyclotomicNumber z(p_, m_);
  for (std::size_t i = 0; i < num_.size(); ++i) z.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
  z.den_ = den_ * o.den_;
  z.normalize();
  return z;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const { return *this + (-o); }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber z = *this;
  for (auto& c : z.num_) c = -c;
  return z;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  require_same_ring(o);
  std::vector<Integer> prod(2 * num_.size() - 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j) prod[i + j] += num_[i] * o.num_[j];
  }
  return from_polynomial(p_, m_, std::move(prod), den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& r) const {
  CyclotomicNumber z = *this;
  for (auto& c : z.num_) c *= r.get_num();
  z.den_ *= r.get_den();
  z.normalize();
  return z;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  return p_ == o.p_ && m_ == o.m_ && num_ == o.num_ && den_ == o.den_;
}

CyclotomicNumber CyclotomicNumber::galois(std::uint64_t t) const {
  if (t % p_ == 0) throw std::invalid_argument("Galois exponent must be prime to p");
  const std::uint64_t order = checked_pow(p_, m_);
  std::vector<Integer> v(order, 0);
  for (std::size_t e = 0; e < num_.size(); ++e) v[(e * (t % order)) % order] += num_[e];
  return from_polynomial(p_, m_, std::move(v), den_);
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (num_[e] == 0) continue;
    if (!first) out << (num_[e] < 0 ? " - " : " + ");
    else if (num_[e] < 0) out << "-";
    first = false;
    Integer mag = abs(num_[e]);
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "z";
      if (e > 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  if (den_ == 1) return out.str();
  return "(" + out.str() + ")/" + den_.get_str();
}

std::optional<Rational> padic_valuation(const CyclotomicNumber& z) {
  if (z.is_zero()) return std::nullopt;
  const Integer res = resultant(z.numerator(), cyclotomic_modulus(z.p(), z.m()));
  Rational v(padic_valuation(res, z.p()), static_cast<long>(z.phi()));
  v.canonicalize();
  return v - padic_valuation(z.denominator(), z.p());
}

}  // namespace wittsum
