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

#include "wittsum/witt.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "wittsum/errors.hpp"

namespace wittsum {
namespace {

__extension__ typedef unsigned __int128 u128;

// Integer polynomial in the 2m Witt variables, used only while building.
using Exponents = std::vector<std::uint16_t>;
using IntPoly = std::map<Exponents, Integer>;

void add_into(IntPoly& acc, const IntPoly& b, const Integer& scale = 1) {
  for (const auto& [e, c] : b) {
    auto& slot = acc[e];
    slot += scale * c;
    if (slot == 0) acc.erase(e);
  }
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  Exponents e;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + eb[i]);
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

IntPoly pow(IntPoly base, std::uint64_t e, std::size_t nvars) {
  IntPoly result{{Exponents(nvars, 0), Integer(1)}};
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

IntPoly variable(std::size_t index, std::size_t nvars) {
  Exponents e(nvars, 0);
  e[index] = 1;
  return IntPoly{{e, Integer(1)}};
}

// Ghost polynomial w_n = sum_{i<=n} p^i V_i^{p^{n-i}} over variables offset..offset+m-1.
IntPoly ghost(std::uint32_t p, unsigned n, std::size_t offset, std::size_t nvars) {
  IntPoly out;
  Integer pi = 1;
  for (unsigned i = 0; i <= n; ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, n - i);
    add_into(out, pow(variable(offset + i, nvars), power.get_ui(), nvars), pi);
    pi *= p;
  }
  return out;
}

std::vector<IntPoly> build_family(std::uint32_t p, unsigned m, bool product) {
  const std::size_t nvars = 2 * m;
  std::vector<IntPoly> out;
  for (unsigned n = 0; n < m; ++n) {
    IntPoly target;
    IntPoly wx = ghost(p, n, 0, nvars);
    IntPoly wy = ghost(p, n, m, nvars);
    if (product) {
      target = mul(wx, wy);
    } else {
      target = wx;
      add_into(target, wy);
    }
    Integer pi = 1;
    for (unsigned i = 0; i < n; ++i) {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, n - i);
      add_into(target, pow(out[i], e.get_ui(), nvars), -pi);
      pi *= p;
    }
    // pi == p^n now; the division must be exact.
    for (auto& [e, c] : target) {
      if (!mpz_divisible_p(c.get_mpz_t(), pi.get_mpz_t())) {
        throw ArithmeticError("Witt polynomial recursion produced a non-integral coefficient");
      }
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pi.get_mpz_t());
    }
    out.push_back(std::move(target));
  }
  return out;
}

WittPolynomial reduce_mod_p(const IntPoly& poly, std::uint32_t p, std::size_t nvars) {
  WittPolynomial out;
  out.max_exponents.assign(nvars, 0);
  for (const auto& [e, c] : poly) {
    Integer r = c % p;
    if (r < 0) r += p;
    if (r == 0) continue;
    out.terms.push_back({static_cast<std::uint32_t>(r.get_ui()), e});
    for (std::size_t i = 0; i < nvars; ++i) out.max_exponents[i] = std::max(out.max_exponents[i], e[i]);
  }
  return out;
}

void require_compatible(const WittVector& x, const WittVector& y) {
  if (x.length() != y.length() || x.coords().front().field_ptr() != y.coords().front().field_ptr()) {
    throw std::invalid_argument("Witt vectors have different lengths or fields");
  }
}

}  // namespace

FFElement WittPolynomial::evaluate(std::span<const FFElement> x, std::span<const FFElement> y) const {
  const FiniteField& field = x.front().field();
  const std::size_t m = x.size();
  // powers[v][e] = value of variable v raised to e.
  std::vector<std::vector<FFElement>> powers(max_exponents.size());
  for (std::size_t v = 0; v < max_exponents.size(); ++v) {
    if (max_exponents[v] == 0) continue;
    const FFElement& base = v < m ? x[v] : y[v - m];
    auto& table = powers[v];
    table.push_back(field.one());
    for (std::uint16_t e = 1; e <= max_exponents[v]; ++e) table.push_back(field.mul(table.back(), base));
  }
  FFElement acc = field.zero();
  for (const auto& term : terms) {
    FFElement t = field.constant(term.coeff);
    for (std::size_t v = 0; v < term.exponents.size(); ++v) {
      if (term.exponents[v] != 0) t = field.mul(t, powers[v][term.exponents[v]]);
    }
    acc = field.add(acc, t);
  }
  return acc;
}

std::shared_ptr<const WittUniversalPolys> WittUniversalPolys::build(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) throw ValidationError("Witt vectors need a prime p");
  if (m == 0 || m > 4) throw ValidationError("Witt vector length must be between 1 and 4");
  std::shared_ptr<WittUniversalPolys> polys(new WittUniversalPolys(p, m));
  const std::size_t nvars = 2 * m;
  for (const auto& s : build_family(p, m, false)) polys->sums_.push_back(reduce_mod_p(s, p, nvars));
  for (const auto& s : build_family(p, m, true)) polys->products_.push_back(reduce_mod_p(s, p, nvars));
  return polys;
}

std::shared_ptr<const WittUniversalPolys> WittUniversalPolys::get(std::uint32_t p, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const WittUniversalPolys>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) slot = build(p, m);
  return slot;
}

WittVector::WittVector(std::vector<FFElement> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("Witt vector needs at least one coordinate");
  for (const auto& c : coords_) {
    if (c.field_ptr() != coords_.front().field_ptr()) throw std::invalid_argument("Witt coordinates in different fields");
  }
}

WittVector WittVector::zero(const FiniteField& field, unsigned m) {
  return WittVector(std::vector<FFElement>(m, field.zero()));
}

WittVector WittVector::one(const FiniteField& field, unsigned m) {
  std::vector<FFElement> c(m, field.zero());
  c[0] = field.one();
  return WittVector(std::move(c));
}

WittVector WittVector::teichmuller(const FFElement& a, unsigned m) {
  std::vector<FFElement> c(m, a.field().zero());
  c[0] = a;
  return WittVector(std::move(c));
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
  require_compatible(x, y);
  const auto polys = WittUniversalPolys::get(x.field().characteristic(), x.length());
  std::vector<FFElement> out;
  out.reserve(x.length());
  for (const auto& s : polys->sums()) out.push_back(s.evaluate(x.coords(), y.coords()));
  return WittVector(std::move(out));
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
  require_compatible(x, y);
  const auto polys = WittUniversalPolys::get(x.field().characteristic(), x.length());
  std::vector<FFElement> out;
  out.reserve(x.length());
  for (const auto& s : polys->products()) out.push_back(s.evaluate(x.coords(), y.coords()));
  return WittVector(std::move(out));
}

WittVector witt_neg(const WittVector& x) {
  // S_n is X_n + Y_n + (terms in lower coordinates), so y_n is forced in turn.
  const FiniteField& field = x.field();
  const auto polys = WittUniversalPolys::get(field.characteristic(), x.length());
  std::vector<FFElement> y(x.length(), field.zero());
  for (unsigned n = 0; n < x.length(); ++n) {
    FFElement s = polys->sums()[n].evaluate(x.coords(), y);
    y[n] = field.neg(s);
  }
  return WittVector(std::move(y));
}

WittVector verschiebung(const WittVector& x) {
  std::vector<FFElement> c;
  c.reserve(x.length());
  c.push_back(x.field().zero());
  for (unsigned i = 0; i + 1 < x.length(); ++i) c.push_back(x[i]);
  return WittVector(std::move(c));
}

WittVector witt_frobenius_galois(const WittVector& x) {
  std::vector<FFElement> c;
  c.reserve(x.length());
  for (const auto& e : x.coords()) c.push_back(x.field().frobenius(e));
  return WittVector(std::move(c));
}

WittVector witt_trace(const WittVector& x) {
  const unsigned n = x.field().degree();
  WittVector sum = x;
  WittVector conj = x;
  for (unsigned r = 1; r < n; ++r) {
    conj = witt_frobenius_galois(conj);
    sum = witt_add(sum, conj);
  }
  for (const auto& c : sum.coords()) {
    if (!c.is_constant()) throw ArithmeticError("Witt trace has a coordinate outside F_p");
  }
  return sum;
}

GRElement omega(const WittVector& x, const GaloisRing& ring) {
  if (ring.residue_field().get() != x.coords().front().field_ptr()) {
    throw std::invalid_argument("omega: ring residue field differs from the Witt vector field");
  }
  if (ring.precision() != x.length()) throw std::invalid_argument("omega: ring precision differs from Witt length");
  const FiniteField& field = x.field();
  GRElement acc = ring.zero();
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < x.length(); ++i) {
    FFElement root = field.frobenius_power(x[i], -static_cast<long>(i));
    acc = ring.add(acc, ring.scale(ring.teichmuller(root), pi));
    pi *= field.characteristic();
  }
  return acc;
}

std::uint64_t omega_prime(const WittVector& x) {
  const std::uint64_t p = x.field().characteristic();
  const unsigned m = x.length();
  const std::uint64_t pm = checked_pow(p, m);
  const std::uint64_t teich_exp = checked_pow(p, m - 1);
  std::uint64_t acc = 0;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (!x[i].is_constant()) throw std::invalid_argument("omega_prime: coordinate outside F_p");
    // Teichmuller lift of c in Z/p^m is c^{p^{m-1}}.
    std::uint64_t base = x[i][0], t = 1, e = teich_exp;
    while (e > 0) {
      if (e & 1) t = static_cast<std::uint64_t>((u128)t * base % pm);
      base = static_cast<std::uint64_t>((u128)base * base % pm);
      e >>= 1;
    }
    acc = (acc + static_cast<std::uint64_t>((u128)pi * t % pm)) % pm;
    pi *= p;
  }
  return acc;
}

}  // namespace wittsum
