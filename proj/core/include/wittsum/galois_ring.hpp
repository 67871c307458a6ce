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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wittsum/finite_field.hpp"

namespace wittsum {

class GaloisRing;

/// Element of GR(p^m, n) = (Z/p^m)[X]/(G), coefficients in [0, p^m).
class GRElement {
 public:
  GRElement() = default;
  GRElement(const GaloisRing* ring, std::vector<std::uint64_t> coeffs)
      : ring_(ring), coeffs_(std::move(coeffs)) {}

  const GaloisRing& ring() const { return *ring_; }
  const GaloisRing* ring_ptr() const { return ring_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_constant() const;
  std::string to_string() const;

  friend bool operator==(const GRElement& a, const GRElement& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  friend GRElement operator+(const GRElement& a, const GRElement& b);
  friend GRElement operator-(const GRElement& a, const GRElement& b);
  friend GRElement operator*(const GRElement& a, const GRElement& b);
  friend GRElement operator-(const GRElement& a);

 private:
  const GaloisRing* ring_ = nullptr;
  std::vector<std::uint64_t> coeffs_;
};

/// The unramified ring Z_{p^n}/p^m, realised as (Z/p^m)[X]/(G) where G is the
/// entrywise integer lift of the residue field modulus. The Frobenius lift
/// sigma(X) is found by Newton iteration from the seed X^p.
///
/// Coefficients are machine words; p^m must stay below 2^31.
class GaloisRing {
  struct Token {};

 public:
  using Ptr = std::shared_ptr<const GaloisRing>;

  /// Throws ValidationError unless p > m and p^m < 2^31.
  static Ptr create(FiniteField::Ptr residue_field, unsigned precision);

  GaloisRing(Token, FiniteField::Ptr residue_field, unsigned precision);
  GaloisRing(const GaloisRing&) = delete;
  GaloisRing& operator=(const GaloisRing&) = delete;

  std::uint32_t characteristic() const { return p_; }
  unsigned precision() const { return m_; }
  unsigned degree() const { return n_; }
  /// p^m.
  std::uint64_t modulus_value() const { return pm_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const FiniteField::Ptr& residue_field() const { return field_; }
  /// sigma(X), the image of the generator under the Frobenius lift.
  const GRElement& frobenius_image() const { return sigma_x_; }

  GRElement zero() const;
  GRElement one() const;
  GRElement constant(std::int64_t c) const;
  GRElement generator() const;
  GRElement element(std::span<const std::int64_t> coeffs) const;

  /// Entrywise lift of a residue to [0, p) coefficients.
  GRElement lift(const FFElement& x) const;
  GRElement teichmuller(const FFElement& x) const;
  FFElement reduce(const GRElement& x) const;

  GRElement add(const GRElement& a, const GRElement& b) const;
  GRElement sub(const GRElement& a, const GRElement& b) const;
  GRElement neg(const GRElement& a) const;
  GRElement mul(const GRElement& a, const GRElement& b) const;
  GRElement scale(const GRElement& a, std::uint64_t c) const;
  GRElement pow(const GRElement& a, std::uint64_t e) const;

  bool is_unit(const GRElement& a) const;
  /// Throws std::domain_error for non-units.
  GRElement inverse(const GRElement& a) const;

  GRElement frobenius(const GRElement& a) const;
  GRElement frobenius_power(const GRElement& a, long r) const;
  /// Sum of the n Frobenius conjugates, as an integer in [0, p^m).
  std::uint64_t trace_to_base(const GRElement& a) const;

 private:
  void check_owner(const GRElement& a) const;
  GRElement evaluate_modulus(const GRElement& y) const;
  GRElement evaluate_modulus_derivative(const GRElement& y) const;

  FiniteField::Ptr field_;
  std::uint32_t p_;
  unsigned m_;
  unsigned n_;
  std::uint64_t pm_;
  std::vector<std::uint64_t> modulus_;
  GRElement sigma_x_;
  std::vector<GRElement> sigma_powers_;  // sigma(X)^i for i < n
  std::vector<std::uint64_t> trace_table_;
};

}  // namespace wittsum
