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

#include "wittsum/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wittsum/errors.hpp"

namespace wittsum {
namespace {

Rational qpow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (long i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C(-b, n) = (-1)^n C(b + n - 1, n).
Rational negative_binomial(unsigned long b, unsigned long n) {
  Rational r(binomial(b + n - 1, n));
  return n % 2 == 0 ? r : Rational(-r);
}

// (x - P)^e.
QPoly linear_power(const Rational& P, unsigned e) {
  QPoly out{Rational(1)};
  const QPoly factor{-P, Rational(1)};
  for (unsigned i = 0; i < e; ++i) out = qpoly_mul(out, factor);
  return out;
}

// Coefficients of a(P + y) as a polynomial in y.
QPoly taylor_shift(const QPoly& a, const Rational& P) {
  QPoly out;
  const QPoly shift{P, Rational(1)};
  for (std::size_t i = a.size(); i-- > 0;) out = qpoly_add(qpoly_mul(out, shift), QPoly{a[i]});
  return out;
}

// Power series a/b mod y^n, b(0) != 0.
std::vector<Rational> series_divide(const QPoly& a, const QPoly& b, unsigned n) {
  std::vector<Rational> out(n, 0);
  for (unsigned s = 0; s < n; ++s) {
    Rational acc = s < a.size() ? a[s] : Rational(0);
    for (unsigned t = 1; t <= s && t < b.size(); ++t) acc -= b[t] * out[s - t];
    out[s] = acc / b[0];
  }
  return out;
}

bool same_pole(const QPole& a, const QPole& b) { return a == b; }

// Adds c * X_ja^a * X_jb^b into out (a, b >= 1).
void add_product(PartialFraction& out, unsigned ja, unsigned a, unsigned jb, unsigned b, const Rational& c) {
  const auto& poles = out.poles();
  if (ja == jb) {
    out.add_term(ja, a + b, c);
    return;
  }
  if (!poles[ja] && !poles[jb]) throw std::logic_error("two poles at infinity");
  if (poles[ja] && poles[jb]) {
    const Rational delta = *poles[ja] - *poles[jb];
    for (unsigned n = 0; n < a; ++n) {
      out.add_term(ja, a - n, c * negative_binomial(b, n) * qpow(delta, -static_cast<long>(b + n)));
    }
    for (unsigned n = 0; n < b; ++n) {
      out.add_term(jb, b - n, c * negative_binomial(a, n) * qpow(-delta, -static_cast<long>(a + n)));
    }
    return;
  }
  // x^a X_P^b with x^a = sum_s C(a,s) P^{a-s} (x - P)^s.
  if (poles[ja]) {
    std::swap(ja, jb);
    std::swap(a, b);
  }
  const Rational& P = *poles[jb];
  for (unsigned s = 0; s <= a; ++s) {
    const Rational w = c * Rational(binomial(a, s)) * qpow(P, a - s);
    if (s < b) {
      out.add_term(jb, b - s, w);
    } else if (s == b) {
      out.add_constant(w);
    } else {
      const unsigned t = s - b;
      for (unsigned r = 0; r <= t; ++r) {
        const Rational v = w * Rational(binomial(t, r)) * qpow(-P, t - r);
        if (r == 0) out.add_constant(v);
        else out.add_term(ja, r, v);
      }
    }
  }
}

// R'_j: degree of (EH) at pole j.
unsigned effective_degree(const ReductionBasis& basis, unsigned pole) {
  return pole < 2 ? basis.R[pole] : basis.R[pole] + 1;
}

// Out-of-basis thresholds for the iterative pass: pole 0 keeps X_0^{R_0} for the final D(1) step.
unsigned iterative_limit(const ReductionBasis& basis, unsigned pole) {
  return pole == 0 ? basis.R[0] : basis.limit(pole);
}

void verify_certificate(const PartialFraction& g, const PartialFraction& H, const ReductionBasis& basis,
                        ReductionResult& result) {
  const PartialFraction rebuilt = apply_D(result.witness, H) + result.residue;
  result.certificate_ok = rebuilt == g && basis.contains(result.residue);
  if (!result.certificate_ok) throw ArithmeticError("reduction certificate g = D(w) + r failed");
}

}  // namespace

QPoly qpoly_trim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return qpoly_trim(std::move(out));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return qpoly_trim(std::move(out));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return qpoly_trim(std::move(out));
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
  const QPoly d = qpoly_trim(b);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r = qpoly_trim(a);
  if (r.size() < d.size()) return {{}, r};
  QPoly q(r.size() - d.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const Rational c = r[shift + d.size() - 1] / d.back();
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
  }
  return {qpoly_trim(std::move(q)), qpoly_trim(std::move(r))};
}

PartialFraction::PartialFraction(std::vector<QPole> poles) : poles_(std::move(poles)), parts_(poles_.size()) {
  for (std::size_t i = 0; i < poles_.size(); ++i) {
    for (std::size_t j = i + 1; j < poles_.size(); ++j) {
      if (same_pole(poles_[i], poles_[j])) throw ValidationError("duplicate pole in partial fraction");
    }
  }
}

PartialFraction PartialFraction::constant(std::vector<QPole> poles, const Rational& c) {
  PartialFraction g(std::move(poles));
  g.add_constant(c);
  return g;
}

PartialFraction PartialFraction::monomial(std::vector<QPole> poles, unsigned pole, unsigned degree, const Rational& c) {
  PartialFraction g(std::move(poles));
  if (degree == 0) g.add_constant(c);
  else g.add_term(pole, degree, c);
  return g;
}

Rational PartialFraction::coefficient(unsigned pole, unsigned degree) const {
  if (degree == 0) return constant_;
  auto it = parts_[pole].find(degree);
  return it == parts_[pole].end() ? Rational(0) : it->second;
}

unsigned PartialFraction::degree(unsigned pole) const {
  return parts_[pole].empty() ? 0 : parts_[pole].rbegin()->first;
}

bool PartialFraction::is_zero() const {
  if (constant_ != 0) return false;
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.empty(); });
}

void PartialFraction::add_constant(const Rational& c) { constant_ += c; }

void PartialFraction::add_term(unsigned pole, unsigned degree, const Rational& c) {
  if (pole >= parts_.size()) throw std::out_of_range("pole index out of range");
  if (degree == 0) {
    constant_ += c;
    return;
  }
  if (c == 0) return;
  auto& slot = parts_[pole][degree];
  slot += c;
  if (slot == 0) parts_[pole].erase(degree);
}

void PartialFraction::require_same_poles(const PartialFraction& o) const {
  if (poles_ != o.poles_) throw std::invalid_argument("partial fractions over different pole sets");
}

PartialFraction PartialFraction::operator+(const PartialFraction& o) const {
  require_same_poles(o);
  PartialFraction r = *this;
  r.constant_ += o.constant_;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    for (const auto& [d, c] : o.parts_[j]) r.add_term(static_cast<unsigned>(j), d, c);
  }
  return r;
}

PartialFraction PartialFraction::operator-(const PartialFraction& o) const { return *this + o * Rational(-1); }

PartialFraction PartialFraction::operator*(const Rational& c) const {
  PartialFraction r(poles_);
  if (c == 0) return r;
  r.constant_ = constant_ * c;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    for (const auto& [d, v] : parts_[j]) r.parts_[j][d] = v * c;
  }
  return r;
}

bool PartialFraction::operator==(const PartialFraction& o) const {
  return poles_ == o.poles_ && constant_ == o.constant_ && parts_ == o.parts_;
}

std::string PartialFraction::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& mono) {
    if (!first) out << " + ";
    first = false;
    out << to_fraction_string(c);
    if (!mono.empty()) out << "*" << mono;
  };
  if (constant_ != 0) emit(constant_, "");
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    const std::string base = poles_[j] ? "X" + std::to_string(j) : std::string("x");
    for (const auto& [d, c] : parts_[j]) emit(c, d == 1 ? base : base + "^" + std::to_string(d));
  }
  if (first) out << "0";
  return out.str();
}

std::pair<QPoly, QPoly> to_rational_function(const PartialFraction& g) {
  const auto& poles = g.poles();
  std::vector<QPoly> factors(poles.size(), QPoly{Rational(1)});
  QPoly den{Rational(1)};
  for (unsigned j = 0; j < poles.size(); ++j) {
    if (poles[j]) {
      factors[j] = linear_power(*poles[j], g.degree(j));
      den = qpoly_mul(den, factors[j]);
    }
  }
  QPoly num = qpoly_mul(den, QPoly{g.constant_term()});
  for (unsigned j = 0; j < poles.size(); ++j) {
    if (!poles[j]) {
      QPoly poly(g.degree(j) + 1, 0);
      for (const auto& [d, c] : g.part(j)) poly[d] = c;
      num = qpoly_add(num, qpoly_mul(qpoly_trim(poly), den));
      continue;
    }
    QPoly others{Rational(1)};
    for (unsigned k = 0; k < poles.size(); ++k) {
      if (k != j && poles[k]) others = qpoly_mul(others, factors[k]);
    }
    const unsigned e = g.degree(j);
    for (const auto& [d, c] : g.part(j)) {
      num = qpoly_add(num, qpoly_mul(qpoly_mul(linear_power(*poles[j], e - d), others), QPoly{c}));
    }
  }
  return {qpoly_trim(num), qpoly_trim(den)};
}

PartialFraction mittag_leffler(const QPoly& numerator, const QPoly& denominator, std::vector<QPole> poles) {
  const QPoly num = qpoly_trim(numerator);
  QPoly rest = qpoly_trim(denominator);
  if (rest.empty()) throw ValidationError("zero denominator");
  PartialFraction out(poles);

  std::vector<unsigned> mult(poles.size(), 0);
  for (unsigned j = 0; j < poles.size(); ++j) {
    if (!poles[j]) continue;
    const QPoly factor{-*poles[j], Rational(1)};
    for (;;) {
      auto [q, r] = qpoly_divmod(rest, factor);
      if (!r.empty()) break;
      rest = std::move(q);
      ++mult[j];
    }
  }
  if (rest.size() != 1) throw ValidationError("denominator has a root outside the declared poles");
  const Rational unit = rest[0];

  auto [quotient, remainder] = qpoly_divmod(num, denominator);
  if (!quotient.empty()) out.add_constant(quotient[0]);
  if (quotient.size() > 1) {
    auto inf = std::find(poles.begin(), poles.end(), std::nullopt);
    if (inf == poles.end()) throw ValidationError("polynomial part present but infinity is not a declared pole");
    const auto j = static_cast<unsigned>(inf - poles.begin());
    for (unsigned d = 1; d < quotient.size(); ++d) out.add_term(j, d, quotient[d]);
  }

  for (unsigned j = 0; j < poles.size(); ++j) {
    if (mult[j] == 0) continue;
    QPoly cofactor{unit};
    for (unsigned k = 0; k < poles.size(); ++k) {
      if (k != j && mult[k] > 0) cofactor = qpoly_mul(cofactor, linear_power(*poles[k], mult[k]));
    }
    const auto t = series_divide(taylor_shift(remainder, *poles[j]), taylor_shift(cofactor, *poles[j]), mult[j]);
    for (unsigned s = 0; s < mult[j]; ++s) out.add_term(j, mult[j] - s, t[s]);
  }

  const auto [rn, rd] = to_rational_function(out);
  if (qpoly_mul(rn, denominator) != qpoly_mul(num, rd)) {
    throw ArithmeticError("partial fraction recombination does not reproduce the input");
  }
  return out;
}

PartialFraction multiply(const PartialFraction& g, const PartialFraction& h) {
  if (g.poles() != h.poles()) throw std::invalid_argument("partial fractions over different pole sets");
  PartialFraction out(g.poles());
  out.add_constant(g.constant_term() * h.constant_term());
  for (unsigned j = 0; j < g.pole_count(); ++j) {
    for (const auto& [d, c] : g.part(j)) out.add_term(j, d, c * h.constant_term());
    for (const auto& [d, c] : h.part(j)) out.add_term(j, d, c * g.constant_term());
  }
  for (unsigned ja = 0; ja < g.pole_count(); ++ja) {
    for (const auto& [a, ca] : g.part(ja)) {
      for (unsigned jb = 0; jb < h.pole_count(); ++jb) {
        for (const auto& [b, cb] : h.part(jb)) add_product(out, ja, a, jb, b, ca * cb);
      }
    }
  }
  return out;
}

PartialFraction apply_E(const PartialFraction& g) {
  PartialFraction out(g.poles());
  for (unsigned j = 0; j < g.pole_count(); ++j) {
    const QPole& P = g.poles()[j];
    for (const auto& [i, c] : g.part(j)) {
      if (!P) {
        out.add_term(j, i, c * i);
        continue;
      }
      out.add_term(j, i, -c * i);
      if (*P != 0) out.add_term(j, i + 1, -c * i * *P);
    }
  }
  return out;
}

PartialFraction apply_D(const PartialFraction& g, const PartialFraction& H) {
  return apply_E(g) + multiply(apply_E(H), g);
}

unsigned ReductionBasis::limit(unsigned pole) const {
  if (pole == 0) return R[0] - 1;
  if (pole == 1) return R[1];
  return R[pole] + 1;
}

bool ReductionBasis::contains(const PartialFraction& g) const {
  if (g.pole_count() != R.size()) return false;
  for (unsigned j = 0; j < R.size(); ++j) {
    if (g.degree(j) > limit(j)) return false;
  }
  return true;
}

ReductionBasis reduction_basis(const PartialFraction& H) {
  const auto& poles = H.poles();
  if (poles.size() < 2) throw ValidationError("reduction needs at least two poles");
  if (!poles[0] || *poles[0] != 0) throw ValidationError("pole 1 must be 0");
  if (poles[1]) throw ValidationError("pole 2 must be infinity");
  ReductionBasis basis;
  for (unsigned j = 0; j < poles.size(); ++j) {
    if (j >= 2 && !poles[j]) throw ValidationError("only pole 2 may be infinity");
    const unsigned R = H.degree(j);
    if (R == 0) throw ValidationError("H must have positive degree at pole " + std::to_string(j + 1));
    basis.R.push_back(R);
  }
  basis.elements.push_back({std::nullopt, 0});
  for (unsigned j = 0; j < poles.size(); ++j) {
    for (unsigned d = 1; d <= basis.limit(j); ++d) basis.elements.push_back({j, d});
  }
  return basis;
}

ReductionResult reduce(const PartialFraction& g, const PartialFraction& H) {
  const ReductionBasis basis = reduction_basis(H);
  if (g.poles() != H.poles()) throw std::invalid_argument("g and H have different poles");
  const PartialFraction EH = apply_E(H);
  const std::size_t ell = basis.R.size();
  std::vector<Rational> lead(ell);
  for (unsigned j = 0; j < ell; ++j) {
    lead[j] = EH.coefficient(j, effective_degree(basis, j));
    if (lead[j] == 0) throw ArithmeticError("EH has a vanishing leading coefficient");
  }

  unsigned cap = 64;
  for (unsigned j = 0; j < ell; ++j) cap += 4 * (g.degree(j) + basis.R[j] + 2) * static_cast<unsigned>(ell);

  ReductionResult result;
  result.residue = g;
  result.witness = PartialFraction(g.poles());
  for (;;) {
    unsigned pole = 0, top = 0;
    for (unsigned j = 0; j < ell; ++j) {
      const unsigned u = result.residue.degree(j);
      if (u > iterative_limit(basis, j) && u > top) {
        top = u;
        pole = j;
      }
    }
    if (top == 0) break;
    if (result.steps == cap) return reduce_by_linear_solve(g, H);
    ++result.steps;
    const unsigned s = top - effective_degree(basis, pole);
    const Rational scalar = result.residue.coefficient(pole, top) / lead[pole];
    const PartialFraction w = PartialFraction::monomial(g.poles(), pole, s, scalar);
    result.residue = result.residue - apply_D(w, H);
    result.witness = result.witness + w;
  }
  const Rational last = result.residue.coefficient(0, basis.R[0]);
  if (last != 0) {
    const Rational scalar = last / lead[0];
    result.residue = result.residue - EH * scalar;
    result.witness.add_constant(scalar);
    ++result.steps;
  }
  verify_certificate(g, H, basis, result);
  return result;
}

ReductionResult reduce_by_linear_solve(const PartialFraction& g, const PartialFraction& H) {
  const ReductionBasis basis = reduction_basis(H);
  if (g.poles() != H.poles()) throw std::invalid_argument("g and H have different poles");
  const std::size_t ell = basis.R.size();

  // Unknowns: the constant and X_j^s for 1 <= s <= max(deg_j g - R'_j, 0) + 1.
  std::vector<PartialFraction> columns{PartialFraction::constant(g.poles(), 1)};
  for (unsigned j = 0; j < ell; ++j) {
    const unsigned reach = g.degree(j) > effective_degree(basis, j) ? g.degree(j) - effective_degree(basis, j) : 0;
    for (unsigned s = 1; s <= reach + 1; ++s) columns.push_back(PartialFraction::monomial(g.poles(), j, s));
  }
  std::vector<PartialFraction> images;
  for (const auto& c : columns) images.push_back(apply_D(c, H));

  // Rows: out-of-basis monomials (pole, degree).
  std::set<std::pair<unsigned, unsigned>> rows;
  auto collect = [&](const PartialFraction& f) {
    for (unsigned j = 0; j < ell; ++j) {
      for (const auto& [d, c] : f.part(j)) {
        if (d > basis.limit(j)) rows.insert({j, d});
      }
    }
  };
  collect(g);
  for (const auto& im : images) collect(im);

  const std::size_t n = columns.size();
  std::vector<std::vector<Rational>> A;
  for (const auto& [j, d] : rows) {
    std::vector<Rational> row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = images[c].coefficient(j, d);
    row[n] = g.coefficient(j, d);
    A.push_back(std::move(row));
  }
  // Gauss-Jordan elimination.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < A.size(); ++c) {
    std::size_t piv = r;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[r], A[piv]);
    const Rational inv = Rational(1) / A[r][c];
    for (auto& v : A[r]) v *= inv;
    for (std::size_t k = 0; k < A.size(); ++k) {
      if (k == r || A[k][c] == 0) continue;
      const Rational f = A[k][c];
      for (std::size_t t = c; t <= n; ++t) A[k][t] -= f * A[r][t];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < A.size(); ++k) {
    if (A[k][n] != 0) throw ArithmeticError("linear reduction system is inconsistent");
  }

  ReductionResult result;
  result.used_fallback = true;
  result.witness = PartialFraction(g.poles());
  for (std::size_t k = 0; k < r; ++k) result.witness = result.witness + columns[pivot_col[k]] * A[k][n];
  result.residue = g - apply_D(result.witness, H);
  result.steps = static_cast<unsigned>(r);
  verify_certificate(g, H, basis, result);
  return result;
}

long h0_dimension(const std::vector<unsigned>& R) {
  if (R.size() < 2) throw ValidationError("h0_dimension needs at least two poles");
  long total = static_cast<long>(R.size()) - 2;
  for (auto r : R) {
    if (r == 0) throw ValidationError("every pole degree R_j must be at least 1");
    total += r;
  }
  return total;
}

std::vector<unsigned> cohomology_shape(const SumSpec& spec) {
  std::optional<unsigned> zero, inf;
  for (unsigned j = 0; j < spec.pole_count(); ++j) {
    const auto& pole = spec.poles()[j];
    if (pole.is_infinite()) inf = j;
    else if (pole.point->is_zero()) zero = j;
  }
  if (!zero || !inf) throw ValidationError("cohomology shape needs both 0 and infinity among the poles");
  std::vector<unsigned> R{static_cast<unsigned>(spec.pole_degree(*zero)), static_cast<unsigned>(spec.pole_degree(*inf))};
  for (unsigned j = 0; j < spec.pole_count(); ++j) {
    if (j != *zero && j != *inf) R.push_back(static_cast<unsigned>(spec.pole_degree(j)));
  }
  return R;
}

}  // namespace wittsum
