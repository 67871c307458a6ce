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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wittsum {

class FiniteField;

/// Element of F_p[X]/(g) stored as a length-n coefficient vector, constant
/// term first. Holds a non-owning pointer to its field, which must outlive it.
class FFElement {
 public:
  FFElement() = default;
  FFElement(const FiniteField* field, std::vector<std::uint32_t> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  /// True when every coefficient above the constant term vanishes.
  bool is_constant() const;
  std::string to_string() const;

  friend bool operator==(const FFElement& a, const FFElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic order on the coefficient vector, constant term first.
  friend bool operator<(const FFElement& a, const FFElement& b) { return a.coeffs_ < b.coeffs_; }

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a);

 private:
  const FiniteField* field_ = nullptr;
  std::vector<std::uint32_t> coeffs_;
};

/// The field F_{p^n} = F_p[X]/(g) for a monic irreducible g of degree n.
///
/// Immutable after construction and safe to share between threads. Elements
/// refer back to the field by address, so instances are neither copyable nor
/// movable; hold them through `FiniteField::Ptr`.
class FiniteField {
  struct Token {};

 public:
  using Ptr = std::shared_ptr<const FiniteField>;

  /// Builds F_{p^n}. Without a modulus the lexicographically smallest monic
  /// irreducible polynomial (constant term compared first) is chosen.
  /// Throws ValidationError for non-prime p or a reducible modulus.
  static Ptr create(std::uint32_t p, unsigned degree,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  FiniteField(Token, std::uint32_t p, unsigned degree, std::vector<std::uint32_t> modulus);
  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  /// p^n; throws std::overflow_error beyond 64 bits.
  std::uint64_t order() const;
  /// Monic modulus, length n + 1, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FFElement zero() const;
  FFElement one() const;
  FFElement constant(std::uint64_t c) const;
  /// The class of X.
  FFElement generator() const;
  /// Reduces coefficients mod p and the polynomial mod g.
  FFElement element(std::span<const std::int64_t> coeffs) const;
  /// Base-p digits of `index` as coefficients (constant term least significant).
  FFElement from_index(std::uint64_t index) const;
  std::uint64_t index_of(const FFElement& x) const;

  FFElement add(const FFElement& a, const FFElement& b) const;
  FFElement sub(const FFElement& a, const FFElement& b) const;
  FFElement neg(const FFElement& a) const;
  FFElement mul(const FFElement& a, const FFElement& b) const;
  FFElement scale(const FFElement& a, std::uint32_t c) const;
  FFElement pow(const FFElement& a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  FFElement inverse(const FFElement& a) const;

  FFElement frobenius(const FFElement& a) const;
  /// a^{p^r}, r taken modulo n (so negative r gives p^{-r}-th roots).
  FFElement frobenius_power(const FFElement& a, long r) const;
  /// Sum of the n Galois conjugates, an element of F_p.
  std::uint32_t trace_to_prime(const FFElement& a) const;

  std::vector<FFElement> enumerate() const;

  /// Irreducibility of a monic polynomial over F_p (Rabin's criterion).
  static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

 private:
  void check_owner(const FFElement& a) const;

  std::uint32_t p_;
  unsigned n_;
  std::vector<std::uint32_t> modulus_;
  // frob_rows_[i] = X^{p i} mod g.
  std::vector<std::vector<std::uint32_t>> frob_rows_;
  // trace_table_[i] = Tr(X^i).
  std::vector<std::uint32_t> trace_table_;
};

/// Field homomorphism F_q -> F_{q^k}, sending the source generator to the
/// lexicographically smallest root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField::Ptr source, FiniteField::Ptr target);

  const FiniteField::Ptr& source() const { return source_; }
  const FiniteField::Ptr& target() const { return target_; }
  /// Image of the source generator X.
  const FFElement& generator_image() const { return root_; }

  FFElement operator()(const FFElement& x) const;

 private:
  FiniteField::Ptr source_;
  FiniteField::Ptr target_;
  FFElement root_;
  std::vector<FFElement> powers_;  // images of X^0..X^{a-1}
};

/// One-shot embedding of x into `target`. Prefer FieldEmbedding for repeated use.
FFElement embed(const FFElement& x, const FiniteField::Ptr& target);

}  // namespace wittsum
