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
#include <vector>

#include "wittsum/numeric.hpp"

namespace wittsum {

/// Phi_{p^m}(X) = sum_{i<p} X^{i p^{m-1}}, constant term first.
std::vector<Integer> cyclotomic_modulus(std::uint32_t p, unsigned m);

/// Resultant of two nonzero integer polynomials (constant term first), by
/// fraction-free (Bareiss) elimination on the Sylvester matrix.
Integer resultant(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Element of Q(zeta_{p^m}): numerator / denominator with the numerator an
/// integer polynomial of degree < phi(p^m) reduced modulo Phi_{p^m}.
/// The denominator is positive and coprime to the numerator's content.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  /// Zero of Q(zeta_{p^m}).
  CyclotomicNumber(std::uint32_t p, unsigned m);

  /// Reduces an arbitrary-length integer polynomial in zeta.
  static CyclotomicNumber from_polynomial(std::uint32_t p, unsigned m, std::vector<Integer> numerator,
                                          Integer denominator = 1);
  static CyclotomicNumber integer(std::uint32_t p, unsigned m, const Integer& n);
  static CyclotomicNumber rational(std::uint32_t p, unsigned m, const Rational& r);
  static CyclotomicNumber zeta_power(std::uint32_t p, unsigned m, std::uint64_t e);
  /// sum_c counts[c] zeta^c for counts indexed by residues mod p^m.
  static CyclotomicNumber from_histogram(std::uint32_t p, unsigned m, const std::vector<std::uint64_t>& counts);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  /// phi(p^m), the length of the numerator vector.
  std::size_t phi() const { return num_.size(); }
  const std::vector<Integer>& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  /// Rational value when the number lies in Q.
  std::optional<Rational> as_rational() const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const Rational& r) const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  bool operator==(const CyclotomicNumber& o) const;

  /// The automorphism zeta -> zeta^t, t prime to p.
  CyclotomicNumber galois(std::uint64_t t) const;

  /// Human-readable form such as "(2 + 3*z^2)/5".
  std::string to_string() const;

 private:
  void normalize();
  void require_same_ring(const CyclotomicNumber& o) const;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// pi-adic valuation normalized so v(p) = 1; nullopt for zero (+infinity).
/// v(z) = v_p(Res(w, Phi_{p^m})) / phi(p^m) - v_p(N) for z = w / N.
std::optional<Rational> padic_valuation(const CyclotomicNumber& z);

}  // namespace wittsum
