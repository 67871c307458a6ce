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

#include "wittsum/galois_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wittsum/errors.hpp"
#include "wittsum/numeric.hpp"

namespace wittsum {

__extension__ typedef unsigned __int128 u128;

bool GRElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool GRElement::is_constant() const {
  return std::all_of(coeffs_.begin() + std::min<std::size_t>(1, coeffs_.size()), coeffs_.end(),
                     [](std::uint64_t c) { return c == 0; });
}

std::string GRElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeffs_[i];
    } else {
      if (coeffs_[i] != 1) out << coeffs_[i] << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

GRElement operator+(const GRElement& a, const GRElement& b) { return a.ring().add(a, b); }
GRElement operator-(const GRElement& a, const GRElement& b) { return a.ring().sub(a, b); }
GRElement operator*(const GRElement& a, const GRElement& b) { return a.ring().mul(a, b); }
GRElement operator-(const GRElement& a) { return a.ring().neg(a); }

GaloisRing::Ptr GaloisRing::create(FiniteField::Ptr residue_field, unsigned precision) {
  const std::uint32_t p = residue_field->characteristic();
  if (precision == 0) throw ValidationError("Galois ring precision m must be at least 1");
  if (p <= precision) {
    throw ValidationError("p > m violated: p = " + std::to_string(p) + ", m = " + std::to_string(precision));
  }
  std::uint64_t pm = 0;
  try {
    pm = checked_pow(p, precision);
  } catch (const std::overflow_error&) {
    pm = ~std::uint64_t{0};
  }
  if (pm >= (std::uint64_t{1} << 31)) throw ValidationError("p^m must be below 2^31");
  return std::make_shared<const GaloisRing>(Token{}, std::move(residue_field), precision);
}

GaloisRing::GaloisRing(Token, FiniteField::Ptr residue_field, unsigned precision)
    : field_(std::move(residue_field)),
      p_(field_->characteristic()),
      m_(precision),
      n_(field_->degree()),
      pm_(checked_pow(field_->characteristic(), precision)) {
  const auto& g = field_->modulus();
  modulus_.assign(g.begin(), g.end());

  // Newton iteration for the root of G congruent to X^p: Y <- Y - G(Y)/G'(Y).
  GRElement y = lift(field_->frobenius(field_->generator()));
  unsigned iterations = 0;
  for (;;) {
    GRElement residual = evaluate_modulus(y);
    if (residual.is_zero()) break;
    if (iterations == m_) throw ArithmeticError("Frobenius lift did not converge within m Newton steps");
    y = sub(y, mul(residual, inverse(evaluate_modulus_derivative(y))));
    ++iterations;
  }
  sigma_x_ = y;
  GRElement power = one();
  for (unsigned i = 0; i < n_; ++i) {
    sigma_powers_.push_back(power);
    power = mul(power, sigma_x_);
  }

  trace_table_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    std::vector<std::uint64_t> c(n_, 0);
    c[i] = 1;
    GRElement x(this, std::move(c));
    GRElement sum = zero();
    for (unsigned r = 0; r < n_; ++r) {
      sum = add(sum, x);
      x = frobenius(x);
    }
    if (!sum.is_constant()) throw ArithmeticError("Galois ring trace is not a constant; Frobenius lift is wrong");
    trace_table_[i] = sum[0];
  }
}

void GaloisRing::check_owner(const GRElement& a) const {
  if (a.ring_ptr() != this) throw std::invalid_argument("element belongs to a different Galois ring");
}

GRElement GaloisRing::evaluate_modulus(const GRElement& y) const {
  GRElement acc = zero();
  for (std::size_t i = modulus_.size(); i-- > 0;) acc = add(mul(acc, y), constant(static_cast<std::int64_t>(modulus_[i])));
  return acc;
}

GRElement GaloisRing::evaluate_modulus_derivative(const GRElement& y) const {
  GRElement acc = zero();
  for (std::size_t i = modulus_.size(); i-- > 1;) {
    acc = add(mul(acc, y), constant(static_cast<std::int64_t>(modulus_[i] * i % pm_)));
  }
  return acc;
}

GRElement GaloisRing::zero() const { return GRElement(this, std::vector<std::uint64_t>(n_, 0)); }

GRElement GaloisRing::one() const { return constant(1); }

GRElement GaloisRing::constant(std::int64_t c) const {
  std::vector<std::uint64_t> v(n_, 0);
  const auto m = static_cast<std::int64_t>(pm_);
  v[0] = static_cast<std::uint64_t>(((c % m) + m) % m);
  return GRElement(this, std::move(v));
}

GRElement GaloisRing::generator() const {
  std::vector<std::int64_t> x{0, 1};
  return element(x);
}

GRElement GaloisRing::element(std::span<const std::int64_t> coeffs) const {
  // Horner in X with reduction by the monic modulus.
  GRElement x = GRElement(this, std::vector<std::uint64_t>(n_, 0));
  GRElement gen = zero();
  if (n_ == 1) {
    gen = constant(-static_cast<std::int64_t>(modulus_[0]));
  } else {
    std::vector<std::uint64_t> v(n_, 0);
    v[1] = 1;
    gen = GRElement(this, std::move(v));
  }
  for (std::size_t i = coeffs.size(); i-- > 0;) x = add(mul(x, gen), constant(coeffs[i]));
  return x;
}

GRElement GaloisRing::lift(const FFElement& x) const {
  if (x.field_ptr() != field_.get()) throw std::invalid_argument("residue is not in the ring's residue field");
  return GRElement(this, std::vector<std::uint64_t>(x.coeffs().begin(), x.coeffs().end()));
}

GRElement GaloisRing::teichmuller(const FFElement& x) const {
  // lift(x)^{(p^n)^{m-1}} via n(m-1) successive p-th powers.
  GRElement y = lift(x);
  const unsigned steps = n_ * (m_ - 1);
  for (unsigned i = 0; i < steps; ++i) y = pow(y, p_);
  return y;
}

FFElement GaloisRing::reduce(const GRElement& x) const {
  check_owner(x);
  std::vector<std::int64_t> c(n_);
  for (unsigned i = 0; i < n_; ++i) c[i] = static_cast<std::int64_t>(x[i] % p_);
  return field_->element(c);
}

GRElement GaloisRing::add(const GRElement& a, const GRElement& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::uint64_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t s = a[i] + b[i];
    r[i] = s >= pm_ ? s - pm_ : s;
  }
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::sub(const GRElement& a, const GRElement& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::uint64_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pm_ - b[i];
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::neg(const GRElement& a) const {
  check_owner(a);
  std::vector<std::uint64_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] == 0 ? 0 : pm_ - a[i];
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::mul(const GRElement& a, const GRElement& b) const {
  check_owner(a);
  check_owner(b);
  if (n_ == 1) return GRElement(this, {a[0] * b[0] % pm_});
  std::vector<u128> buf(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) buf[i + j] += u128{a[i]} * b[j];
  }
  for (unsigned e = 2 * n_ - 1; e-- > n_;) {
    const std::uint64_t c = static_cast<std::uint64_t>(buf[e] % pm_);
    if (c == 0) continue;
    const std::uint64_t neg_c = pm_ - c;
    for (unsigned i = 0; i < n_; ++i) buf[e - n_ + i] += u128{neg_c} * modulus_[i];
  }
  std::vector<std::uint64_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = static_cast<std::uint64_t>(buf[i] % pm_);
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::scale(const GRElement& a, std::uint64_t c) const {
  check_owner(a);
  c %= pm_;
  std::vector<std::uint64_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] * c % pm_;
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::pow(const GRElement& a, std::uint64_t e) const {
  GRElement result = one();
  GRElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool GaloisRing::is_unit(const GRElement& a) const {
  return std::any_of(a.coeffs().begin(), a.coeffs().end(), [&](std::uint64_t c) { return c % p_ != 0; });
}

GRElement GaloisRing::inverse(const GRElement& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a non-unit in a Galois ring");
  GRElement y = lift(field_->inverse(reduce(a)));
  const GRElement two = constant(2);
  // Each Newton step doubles the p-adic precision.
  for (unsigned prec = 1; prec < m_; prec *= 2) y = mul(y, sub(two, mul(a, y)));
  return y;
}

GRElement GaloisRing::frobenius(const GRElement& a) const {
  if (n_ == 1) return a;
  std::vector<u128> acc(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    const auto& row = sigma_powers_[i];
    for (unsigned j = 0; j < n_; ++j) acc[j] += u128{a[i]} * row[j];
  }
  std::vector<std::uint64_t> r(n_);
  for (unsigned j = 0; j < n_; ++j) r[j] = static_cast<std::uint64_t>(acc[j] % pm_);
  return GRElement(this, std::move(r));
}

GRElement GaloisRing::frobenius_power(const GRElement& a, long r) const {
  const long n = static_cast<long>(n_);
  long steps = ((r % n) + n) % n;
  GRElement x = a;
  for (long i = 0; i < steps; ++i) x = frobenius(x);
  return x;
}

std::uint64_t GaloisRing::trace_to_base(const GRElement& a) const {
  u128 acc = 0;
  for (unsigned i = 0; i < n_; ++i) acc += u128{a[i]} * trace_table_[i];
  return static_cast<std::uint64_t>(acc % pm_);
}

}  // namespace wittsum
