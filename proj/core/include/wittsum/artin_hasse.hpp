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
#include <vector>

#include "wittsum/numeric.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

/// Coefficients u_0..u_N of exp(sum_{i=0}^{k} x^{p^i} / p^i); classical
/// (all i) when `truncation` is empty.
struct AHSeries {
  std::uint32_t p = 0;
  std::optional<unsigned> truncation;
  std::vector<Rational> u;
};

/// n u_n = sum_{i <= k, p^i <= n} u_{n - p^i}.
AHSeries ah_coefficients(std::uint32_t p, std::optional<unsigned> truncation, unsigned N);

/// Outcome of comparing a sum of monomial terms against a valuation bound.
struct ValuationReport {
  Rational bound = 0;
  /// Smallest term valuation; empty when no term exists.
  std::optional<Rational> minimum;
  /// minimum == bound.
  bool achieved = false;
  /// Exactly one term attains the minimum, so the sum has that valuation.
  bool unique_min = false;
  /// The equality condition as stated for the estimate.
  bool predicted_equality = false;
  /// A minimizing term: a composition, a level split, or a term index.
  std::vector<unsigned> witness;
  std::uint64_t terms = 0;
};

struct ThetaRow {
  unsigned i = 0;
  /// v(theta_{ki}) = v_p(u_{ki}) + i / (p^{k-1}(p-1)).
  Rational valuation;
  Rational bound;
  Rational u_valuation;
  Rational u_bound;
};

/// Checks v(theta_{ki}) >= i(p-k)/p^{k+1} and
/// v_p(u_{ki}) >= -i(1/(p-1) + k + 1)/p^{k+1} for i <= N. Requires 1 <= k < p.
/// Throws ArithmeticError on a violation.
std::vector<ThetaRow> theta_valuation_bound_check(std::uint32_t p, unsigned k, unsigned N);

/// Throws ArithmeticError unless v_p(u_i) >= 0 for the classical u_0..u_N.
void classical_integrality_check(std::uint32_t p, unsigned N);

/// Terms p^i/(p^{k-1}(p-1)) - i for 0 <= i <= j; the minimum must be unique,
/// sit at i = j and equal 1/(p^{k-1-j}(p-1)) - j. Throws ArithmeticError otherwise.
ValuationReport gamma_valuation(std::uint32_t p, unsigned k, unsigned j);

/// Terms of F_{ij,n}: compositions (n_k) over the nonzero a_{ijk}, k >= 1,
/// with sum k n_k = n, valued sum_k v_p(u_{n_k}) + (sum_k n_k)/(p^{m-i-1}(p-1)).
/// Bound n/(d_{ij} p^{m-i-1}(p-1)); predicted equality iff d_{ij} | n and
/// u_{n/d_{ij}} is a unit. Throws BudgetExceeded past `max_terms` compositions.
ValuationReport fijn_valuation_analysis(const SumSpec& spec, unsigned level, unsigned pole, unsigned n,
                                        std::uint64_t max_terms = 1'000'000);

/// F_{j,n} as a sum over level splits n_0 + ... + n_{m-1} = n of products of
/// F_{ij,n_i}. Bound n/(d_{i_j,j} p^{m-i_j-1}(p-1)). Throws ArithmeticError if
/// the bound-minimizing split is not the one concentrated at i_j.
ValuationReport fjn_valuation_analysis(const SumSpec& spec, unsigned pole, unsigned n,
                                       std::uint64_t max_terms = 1'000'000);

struct AHBatteryConfig {
  std::vector<std::uint32_t> primes{3, 5, 7};
  unsigned max_truncation = 2;
  unsigned max_index = 50;
};

struct AHBatteryResult {
  unsigned theta_rows = 0;
  unsigned gamma_cases = 0;
  unsigned integrality_primes = 0;
};

/// Runs the theta, classical integrality and gamma checks over the config,
/// with 1 <= k <= min(max_truncation, p - 1). Throws on the first violation.
AHBatteryResult run_ah_battery(const AHBatteryConfig& config);

}  // namespace wittsum
