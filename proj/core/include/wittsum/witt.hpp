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
#include <vector>

#include "wittsum/finite_field.hpp"
#include "wittsum/galois_ring.hpp"
#include "wittsum/numeric.hpp"

namespace wittsum {

/// A polynomial over F_p in the 2m variables X_0..X_{m-1}, Y_0..Y_{m-1}.
struct WittPolynomial {
  struct Monomial {
    std::uint32_t coeff;
    std::vector<std::uint16_t> exponents;  // X exponents first, then Y
  };
  std::vector<Monomial> terms;
  std::vector<std::uint16_t> max_exponents;  // per variable, over all terms

  /// Evaluates at coordinates x, y over any field of characteristic p.
  FFElement evaluate(std::span<const FFElement> x, std::span<const FFElement> y) const;
};

/// Universal addition and multiplication polynomials of W_m over F_p.
///
/// Built over exact integers by the ghost-component recursion
///   S_n = (w_n(X) + w_n(Y) - sum_{i<n} p^i S_i^{p^{n-i}}) / p^n,
/// every division asserted exact, then reduced mod p. Products use
/// w_n(X) w_n(Y) in place of the sum.
class WittUniversalPolys {
 public:
  /// Cached per (p, m); thread safe. m is capped at 4.
  static std::shared_ptr<const WittUniversalPolys> get(std::uint32_t p, unsigned m);
  static std::shared_ptr<const WittUniversalPolys> build(std::uint32_t p, unsigned m);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  const std::vector<WittPolynomial>& sums() const { return sums_; }
  const std::vector<WittPolynomial>& products() const { return products_; }

 private:
  WittUniversalPolys(std::uint32_t p, unsigned m) : p_(p), m_(m) {}

  std::uint32_t p_;
  unsigned m_;
  std::vector<WittPolynomial> sums_;
  std::vector<WittPolynomial> products_;
};

/// A truncated Witt vector (x_0, ..., x_{m-1}) over a finite field.
class WittVector {
 public:
  WittVector() = default;
  explicit WittVector(std::vector<FFElement> coords);

  static WittVector zero(const FiniteField& field, unsigned m);
  static WittVector one(const FiniteField& field, unsigned m);
  /// Teichmuller representative (a, 0, ..., 0).
  static WittVector teichmuller(const FFElement& a, unsigned m);

  unsigned length() const { return static_cast<unsigned>(coords_.size()); }
  const FiniteField& field() const { return coords_.front().field(); }
  const std::vector<FFElement>& coords() const { return coords_; }
  const FFElement& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const WittVector&, const WittVector&) = default;

 private:
  std::vector<FFElement> coords_;
};

WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_mul(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);
/// Shift right: (x_0, ..., x_{m-1}) -> (0, x_0, ..., x_{m-2}).
WittVector verschiebung(const WittVector& x);
/// Coordinatewise Frobenius (the Galois action on W_m of a perfect field).
WittVector witt_frobenius_galois(const WittVector& x);
/// Witt sum of all Galois conjugates; coordinates lie in F_p (checked).
WittVector witt_trace(const WittVector& x);

/// The ring isomorphism W_m(F_{p^n}) -> GR(p^m, n),
/// (x_0, ...) -> sum_i p^i Teich(x_i^{p^{-i}}).
GRElement omega(const WittVector& x, const GaloisRing& ring);

/// omega for a vector whose coordinates lie in F_p, as an integer mod p^m.
std::uint64_t omega_prime(const WittVector& x);

}  // namespace wittsum
