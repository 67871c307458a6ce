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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittsum/numeric.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

/// A pole of a rational function over Q; nullopt is infinity.
using QPole = std::optional<Rational>;

/// Polynomial over Q, constant term first, no trailing zeros.
using QPoly = std::vector<Rational>;

QPoly qpoly_trim(QPoly a);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);

/// A finite sum  c + sum_{j, i >= 1} g_{j,i} X_j^i  with X_j = 1/(x - P_j)
/// for finite P_j and X_j = x for the pole at infinity.
class PartialFraction {
 public:
  PartialFraction() = default;
  explicit PartialFraction(std::vector<QPole> poles);

  static PartialFraction constant(std::vector<QPole> poles, const Rational& c);
  static PartialFraction monomial(std::vector<QPole> poles, unsigned pole, unsigned degree,
                                  const Rational& c = 1);

  const std::vector<QPole>& poles() const { return poles_; }
  std::size_t pole_count() const { return poles_.size(); }
  const Rational& constant_term() const { return constant_; }
  /// Nonzero coefficients of pole j, keyed by degree.
  const std::map<unsigned, Rational>& part(unsigned pole) const { return parts_[pole]; }
  Rational coefficient(unsigned pole, unsigned degree) const;
  /// Highest degree with a nonzero coefficient at the pole, 0 if none.
  unsigned degree(unsigned pole) const;
  bool is_zero() const;

  void add_constant(const Rational& c);
  void add_term(unsigned pole, unsigned degree, const Rational& c);

  PartialFraction operator+(const PartialFraction& o) const;
  PartialFraction operator-(const PartialFraction& o) const;
  PartialFraction operator*(const Rational& c) const;
  bool operator==(const PartialFraction& o) const;

  std::string to_string() const;

 private:
  void require_same_poles(const PartialFraction& o) const;

  std::vector<QPole> poles_;
  Rational constant_ = 0;
  std::vector<std::map<unsigned, Rational>> parts_;
};

/// numerator / denominator with denominator = prod_j (x - P_j)^{e_j}
/// over the finite poles.
std::pair<QPoly, QPoly> to_rational_function(const PartialFraction& g);

/// Decomposes num/den into principal parts at the declared poles (by Taylor
/// expansion at each finite pole, polynomial part at infinity) and checks
/// that recombination reproduces the input. Throws ValidationError for a
/// pole outside the declared set, ArithmeticError if the check fails.
PartialFraction mittag_leffler(const QPoly& numerator, const QPoly& denominator, std::vector<QPole> poles);

/// Product, re-expanded into partial fractions.
PartialFraction multiply(const PartialFraction& g, const PartialFraction& h);

/// E = x d/dx:  E(X_j^i) = -i X_j^i - i P_j X_j^{i+1} (finite), E(x^i) = i x^i.
PartialFraction apply_E(const PartialFraction& g);

/// D g = E g + (E H) g.
PartialFraction apply_D(const PartialFraction& g, const PartialFraction& H);

/// The basis monomials for H of pole degrees R_j, with poles[0] = 0 and
/// poles[1] = infinity:  1, X_0^{1..R_0-1}, x^{1..R_1}, X_j^{1..R_j+1} (j >= 2).
struct ReductionBasis {
  struct Element {
    std::optional<unsigned> pole;  // empty: the constant 1
    unsigned degree = 0;
  };
  std::vector<unsigned> R;
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
  /// Largest degree at the pole that lies in the basis.
  unsigned limit(unsigned pole) const;
  bool contains(const PartialFraction& g) const;
};

/// Throws ValidationError unless poles[0] = 0, poles[1] = infinity, all
/// poles distinct and every pole of H has positive degree.
ReductionBasis reduction_basis(const PartialFraction& H);

struct ReductionResult {
  PartialFraction residue;
  PartialFraction witness;
  unsigned steps = 0;
  bool used_fallback = false;
  /// g = D(witness) + residue, recomputed independently.
  bool certificate_ok = false;
};

/// Leading-term elimination: the highest out-of-basis X_j^u (j != 0, or
/// u > R_0 at pole 0) is cancelled with D(X_j^{u-R'_j}); X_0^{R_0} is
/// cancelled last with D(1) = EH. Falls back to the linear solve past an
/// iteration cap. Throws ArithmeticError if the certificate fails.
ReductionResult reduce(const PartialFraction& g, const PartialFraction& H);

/// Solves g - D(w) in span B over a finite monomial space for w.
ReductionResult reduce_by_linear_solve(const PartialFraction& g, const PartialFraction& H);

/// sum_j R_j + l - 2. Requires l >= 2 and every R_j >= 1.
long h0_dimension(const std::vector<unsigned>& R);

/// Pole degrees D_j reordered as (pole 0, pole infinity, others). Throws
/// ValidationError unless both 0 and infinity are poles of the spec.
std::vector<unsigned> cohomology_shape(const SumSpec& spec);

}  // namespace wittsum
