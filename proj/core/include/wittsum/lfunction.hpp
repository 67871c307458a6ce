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

#include "wittsum/cyclotomic.hpp"
#include "wittsum/exp_sum.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

/// c_0..c_N of exp(sum_k S_k s^k / k), from n c_n = sum_{k=1}^n S_k c_{n-k}.
/// `sums[k-1]` is S_k.
std::vector<CyclotomicNumber> lseries_coefficients(const std::vector<CyclotomicNumber>& sums);

struct LPolynomial {
  std::uint32_t p = 0;
  unsigned m = 0;
  /// c_0..c_d.
  std::vector<CyclotomicNumber> coeffs;
  long degree = 0;
  /// False when the degree check was bypassed (permissive specs).
  bool degree_checked = true;
};

struct LFunctionResult {
  LPolynomial polynomial;
  long expected_degree = 0;
  unsigned buffer = 0;
  /// Every computed coefficient c_0..c_{d+buffer}.
  std::vector<CyclotomicNumber> series;
  std::vector<SumResult> sums;
};

/// Computes S_f(1..d+b), checks c_n integral, c_n = 0 for d < n <= d+b and
/// c_d != 0, and returns the degree-d polynomial. Throws IntegralityViolation
/// or DegreeViolation; permissive specs skip the degree check and keep the
/// computed series up to its last nonzero coefficient.
LFunctionResult lfun_polynomial(const SumSpec& spec, std::optional<unsigned> buffer = std::nullopt,
                                const EngineOptions& options = {}, std::vector<SumResult> prior = {});

/// C_0..C_N of exp(-sum_k S_k s^k / ((q^k - 1) k)).
std::vector<CyclotomicNumber> characteristic_series(const std::vector<CyclotomicNumber>& sums, std::uint64_t q);

struct CfIdentityReport {
  bool passed = true;
  unsigned order = 0;
  /// Smallest n with C_n != sum_j q^j C_j L_{n-j}.
  std::optional<unsigned> first_failure;
};

/// Checks C(s) = C(qs) L(s) coefficientwise through s^order, with C built
/// from `sums` and L given separately (coefficients beyond its length are 0).
CfIdentityReport cf_identity_check(const std::vector<CyclotomicNumber>& sums,
                                   const std::vector<CyclotomicNumber>& l_coeffs, std::uint64_t q, unsigned order);

}  // namespace wittsum
