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

#include "wittsum/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wittsum/errors.hpp"
#include "wittsum/numeric.hpp"

namespace wittsum {
namespace {

// Dense polynomials over F_p, constant term first, trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  std::uint32_t lead_inv = inv_mod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t e = a.size(); e-- >= b.size();) {
    std::uint64_t c = std::uint64_t{a[e]} * lead_inv % p;
    q[e - (b.size() - 1)] = static_cast<std::uint32_t>(c);
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::size_t idx = e - (b.size() - 1) + i;
      a[idx] = static_cast<std::uint32_t>((a[idx] + (p - c) * b[i]) % p);
    }
  }
  trim(q);
  trim(a);
  return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& m, std::uint32_t p) { return poly_divmod(a, m, p).second; }

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// FFElement -----------------------------------------------------------------

bool FFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FFElement::is_constant() const {
  return std::all_of(coeffs_.begin() + std::min<std::size_t>(1, coeffs_.size()), coeffs_.end(),
                     [](std::uint32_t c) { return c == 0; });
}

std::string FFElement::to_string() const {
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

FFElement operator+(const FFElement& a, const FFElement& b) { return a.field().add(a, b); }
FFElement operator-(const FFElement& a, const FFElement& b) { return a.field().sub(a, b); }
FFElement operator*(const FFElement& a, const FFElement& b) { return a.field().mul(a, b); }
FFElement operator-(const FFElement& a) { return a.field().neg(a); }

// FiniteField ---------------------------------------------------------------

bool FiniteField::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  const Poly x{0, 1};
  // Frobenius powers X^{p^i} mod f for i = 0..n.
  std::vector<Poly> frob{poly_mod(x, f, p)};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (poly_sub(frob[n], poly_mod(x, f, p), p) != Poly{}) return false;
  for (unsigned r : prime_divisors(n)) {
    Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteField::Ptr FiniteField::create(std::uint32_t p, unsigned degree,
                                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw ValidationError("characteristic must be below 65536");
  if (degree == 0) throw ValidationError("field degree must be at least 1");
  std::vector<std::uint32_t> g;
  if (modulus) {
    g = *modulus;
    if (g.size() != degree + 1 || g.back() % p != 1) {
      throw ValidationError("field modulus must be monic of degree " + std::to_string(degree));
    }
    for (auto& c : g) c %= p;
    if (!is_irreducible(p, g)) throw ValidationError("field modulus is reducible over F_" + std::to_string(p));
  } else {
    const std::uint64_t count = checked_pow(p, degree);
    g.assign(degree + 1, 0);
    g[degree] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      // c_0 is the most significant digit so that idx order is lexicographic.
      std::uint64_t rest = idx;
      for (unsigned j = degree; j-- > 0;) {
        g[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      found = is_irreducible(p, g);
    }
    if (!found) throw ArithmeticError("no irreducible polynomial found");
  }
  return std::make_shared<const FiniteField>(Token{}, p, degree, std::move(g));
}

FiniteField::FiniteField(Token, std::uint32_t p, unsigned degree, std::vector<std::uint32_t> modulus)
    : p_(p), n_(degree), modulus_(std::move(modulus)) {
  // Rows of the Frobenius matrix: X^{p i} mod g.
  Poly xp = poly_powmod(Poly{0, 1}, p_, modulus_, p_);
  Poly cur{1};
  for (unsigned i = 0; i < n_; ++i) {
    Poly row = cur;
    row.resize(n_, 0);
    frob_rows_.push_back(std::move(row));
    cur = poly_mod(poly_mul(cur, xp, p_), modulus_, p_);
  }
  trace_table_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    std::vector<std::uint32_t> c(n_, 0);
    if (n_ == 1) {
      c[0] = (i == 0) ? 1 : 0;
    } else {
      c[i] = 1;
    }
    FFElement x(this, c);
    FFElement sum = zero();
    for (unsigned r = 0; r < n_; ++r) {
      sum = add(sum, x);
      x = frobenius(x);
    }
    if (!sum.is_constant()) throw ArithmeticError("field trace is not in the prime field");
    trace_table_[i] = sum[0];
  }
}

std::uint64_t FiniteField::order() const { return checked_pow(p_, n_); }

void FiniteField::check_owner(const FFElement& a) const {
  if (a.field_ptr() != this) throw std::invalid_argument("element belongs to a different field");
}

FFElement FiniteField::zero() const { return FFElement(this, std::vector<std::uint32_t>(n_, 0)); }

FFElement FiniteField::one() const { return constant(1); }

FFElement FiniteField::constant(std::uint64_t c) const {
  std::vector<std::uint32_t> v(n_, 0);
  v[0] = static_cast<std::uint32_t>(c % p_);
  return FFElement(this, std::move(v));
}

FFElement FiniteField::generator() const {
  std::vector<std::int64_t> x{0, 1};
  return element(x);
}

FFElement FiniteField::element(std::span<const std::int64_t> coeffs) const {
  Poly a;
  a.reserve(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p_);
  for (std::int64_t c : coeffs) a.push_back(static_cast<std::uint32_t>(((c % sp) + sp) % sp));
  Poly r = poly_mod(a, modulus_, p_);
  r.resize(n_, 0);
  return FFElement(this, std::move(r));
}

FFElement FiniteField::from_index(std::uint64_t index) const {
  std::vector<std::uint32_t> v(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    v[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FFElement(this, std::move(v));
}

std::uint64_t FiniteField::index_of(const FFElement& x) const {
  check_owner(x);
  std::uint64_t idx = 0;
  for (unsigned i = n_; i-- > 0;) idx = idx * p_ + x[i];
  return idx;
}

FFElement FiniteField::add(const FFElement& a, const FFElement& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return FFElement(this, std::move(r));
}

FFElement FiniteField::sub(const FFElement& a, const FFElement& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return FFElement(this, std::move(r));
}

FFElement FiniteField::neg(const FFElement& a) const {
  check_owner(a);
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return FFElement(this, std::move(r));
}

FFElement FiniteField::mul(const FFElement& a, const FFElement& b) const {
  check_owner(a);
  check_owner(b);
  if (n_ == 1) {
    return FFElement(this, {static_cast<std::uint32_t>(std::uint64_t{a[0]} * b[0] % p_)});
  }
  std::vector<std::uint64_t> buf(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) buf[i + j] += std::uint64_t{a[i]} * b[j];
  }
  for (unsigned e = 2 * n_ - 1; e-- > n_;) {
    std::uint64_t c = buf[e] % p_;
    if (c == 0) continue;
    const std::uint64_t neg_c = p_ - c;
    for (unsigned i = 0; i < n_; ++i) buf[e - n_ + i] += neg_c * modulus_[i];
  }
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>(buf[i] % p_);
  return FFElement(this, std::move(r));
}

FFElement FiniteField::scale(const FFElement& a, std::uint32_t c) const {
  check_owner(a);
  std::vector<std::uint32_t> r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * (c % p_) % p_);
  return FFElement(this, std::move(r));
}

FFElement FiniteField::pow(const FFElement& a, std::uint64_t e) const {
  FFElement result = one();
  FFElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FFElement FiniteField::inverse(const FFElement& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in a finite field");
  if (n_ == 1) return FFElement(this, {inv_mod(a[0], p_)});
  // Extended Euclid: track s with s*a = r (mod g).
  Poly r0 = modulus_, r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1, p_);
    Poly s = poly_sub(s0, poly_mul(q, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since g is irreducible.
  std::uint32_t c = inv_mod(r1[0], p_);
  Poly inv = poly_mod(poly_mul(s1, Poly{c}, p_), modulus_, p_);
  inv.resize(n_, 0);
  return FFElement(this, std::move(inv));
}

FFElement FiniteField::frobenius(const FFElement& a) const {
  if (n_ == 1) return a;
  std::vector<std::uint64_t> acc(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    const auto& row = frob_rows_[i];
    for (unsigned j = 0; j < n_; ++j) acc[j] += std::uint64_t{a[i]} * row[j];
  }
  std::vector<std::uint32_t> r(n_);
  for (unsigned j = 0; j < n_; ++j) r[j] = static_cast<std::uint32_t>(acc[j] % p_);
  return FFElement(this, std::move(r));
}

FFElement FiniteField::frobenius_power(const FFElement& a, long r) const {
  const long n = static_cast<long>(n_);
  long steps = ((r % n) + n) % n;
  FFElement x = a;
  for (long i = 0; i < steps; ++i) x = frobenius(x);
  return x;
}

std::uint32_t FiniteField::trace_to_prime(const FFElement& a) const {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < n_; ++i) acc += std::uint64_t{a[i]} * trace_table_[i];
  return static_cast<std::uint32_t>(acc % p_);
}

std::vector<FFElement> FiniteField::enumerate() const {
  const std::uint64_t q = order();
  std::vector<FFElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(from_index(i));
  return out;
}

// FieldEmbedding -------------------------------------------------------------

FieldEmbedding::FieldEmbedding(FiniteField::Ptr source, FiniteField::Ptr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->characteristic() != target_->characteristic()) {
    throw ValidationError("embedding between fields of different characteristic");
  }
  const unsigned a = source_->degree();
  if (target_->degree() % a != 0) {
    throw ValidationError("embedding requires the source degree to divide the target degree");
  }
  const auto& g = source_->modulus();
  auto eval = [&](const FFElement& y) {
    FFElement acc = target_->zero();
    for (std::size_t i = g.size(); i-- > 0;) acc = target_->add(target_->mul(acc, y), target_->constant(g[i]));
    return acc;
  };
  if (source_.get() == target_.get()) {
    root_ = target_->generator();
  } else if (a == 1) {
    root_ = target_->constant(target_->characteristic() - g[0]);
  } else {
    const std::uint64_t order = target_->order();
    bool found = false;
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      FFElement y = target_->from_index(idx);
      if (eval(y).is_zero()) {
        // The roots are the a Frobenius conjugates of any one root.
        root_ = y;
        for (unsigned r = 1; r < a; ++r) {
          y = target_->frobenius(y);
          root_ = std::min(root_, y);
        }
        found = true;
        break;
      }
    }
    if (!found) throw ArithmeticError("source modulus has no root in the target field");
  }
  FFElement power = target_->one();
  for (unsigned i = 0; i < a; ++i) {
    powers_.push_back(power);
    power = target_->mul(power, root_);
  }
}

FFElement FieldEmbedding::operator()(const FFElement& x) const {
  if (x.field_ptr() != source_.get()) throw std::invalid_argument("element is not in the embedding source");
  if (source_.get() == target_.get()) return x;
  FFElement acc = target_->zero();
  for (unsigned i = 0; i < powers_.size(); ++i) {
    if (x[i] != 0) acc = target_->add(acc, target_->scale(powers_[i], x[i]));
  }
  return acc;
}

FFElement embed(const FFElement& x, const FiniteField::Ptr& target) {
  FiniteField::Ptr source(FiniteField::Ptr{}, x.field_ptr());  // non-owning alias
  return FieldEmbedding(source, target)(x);
}

}  // namespace wittsum
