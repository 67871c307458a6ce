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

#include "wittsum/lfunction.hpp"

#include "wittsum/errors.hpp"

namespace wittsum {

std::vector<CyclotomicNumber> lseries_coefficients(const std::vector<CyclotomicNumber>& sums) {
  if (sums.empty()) throw std::invalid_argument("lseries_coefficients needs at least S_1");
  const std::uint32_t p = sums.front().p();
  const unsigned m = sums.front().m();
  std::vector<CyclotomicNumber> c{CyclotomicNumber::integer(p, m, 1)};
  for (std::size_t n = 1; n <= sums.size(); ++n) {
    CyclotomicNumber acc(p, m);
    for (std::size_t k = 1; k <= n; ++k) acc += sums[k - 1] * c[n - k];
    c.push_back(acc * Rational(1, static_cast<unsigned long>(n)));
  }
  return c;
}

LFunctionResult lfun_polynomial(const SumSpec& spec, std::optional<unsigned> buffer, const EngineOptions& options,
                                std::vector<SumResult> prior) {
  LFunctionResult out;
  out.expected_degree = degree_formula(spec);
  out.buffer = buffer.value_or(spec.buffer());
  const auto d = static_cast<std::size_t>(out.expected_degree);
  const unsigned order = static_cast<unsigned>(d + out.buffer);
  if (order == 0) throw ValidationError("degree plus buffer must be positive");

  out.sums = sum_sequence(spec, order, options, std::move(prior));
  std::vector<CyclotomicNumber> values;
  for (const auto& s : out.sums) values.push_back(s.value);
  out.series = lseries_coefficients(values);

  for (std::size_t n = 0; n < out.series.size(); ++n) {
    if (!out.series[n].is_integral()) {
      throw IntegralityViolation("L-function coefficient c_" + std::to_string(n) + " = " +
                                 out.series[n].to_string() + " is not integral");
    }
  }

  LPolynomial& poly = out.polynomial;
  poly.p = spec.p();
  poly.m = spec.m();
  if (spec.permissive()) {
    std::size_t last = 0;
    for (std::size_t n = 0; n < out.series.size(); ++n) {
      if (!out.series[n].is_zero()) last = n;
    }
    poly.coeffs.assign(out.series.begin(), out.series.begin() + static_cast<long>(last) + 1);
    poly.degree = static_cast<long>(last);
    poly.degree_checked = false;
    return out;
  }
  for (std::size_t n = d + 1; n < out.series.size(); ++n) {
    if (!out.series[n].is_zero()) {
      throw DegreeViolation("c_" + std::to_string(n) + " = " + out.series[n].to_string() +
                            " is nonzero beyond the expected degree " + std::to_string(d));
    }
  }
  if (out.series[d].is_zero()) {
    throw DegreeViolation("leading coefficient c_" + std::to_string(d) + " vanishes");
  }
  poly.coeffs.assign(out.series.begin(), out.series.begin() + static_cast<long>(d) + 1);
  poly.degree = static_cast<long>(d);
  return out;
}

std::vector<CyclotomicNumber> characteristic_series(const std::vector<CyclotomicNumber>& sums, std::uint64_t q) {
  if (sums.empty()) throw std::invalid_argument("characteristic_series needs at least S_1");
  const std::uint32_t p = sums.front().p();
  const unsigned m = sums.front().m();
  // k b_k = -S_k / (q^k - 1).
  std::vector<CyclotomicNumber> kb;
  Integer qk = 1;
  for (const auto& s : sums) {
    qk *= Integer(std::to_string(q));
    kb.push_back(s * Rational(Integer(-1), qk - 1));
  }
  std::vector<CyclotomicNumber> c{CyclotomicNumber::integer(p, m, 1)};
  for (std::size_t n = 1; n <= sums.size(); ++n) {
    CyclotomicNumber acc(p, m);
    for (std::size_t k = 1; k <= n; ++k) acc += kb[k - 1] * c[n - k];
    c.push_back(acc * Rational(1, static_cast<unsigned long>(n)));
  }
  return c;
}

CfIdentityReport cf_identity_check(const std::vector<CyclotomicNumber>& sums,
                                   const std::vector<CyclotomicNumber>& l_coeffs, std::uint64_t q, unsigned order) {
  if (sums.size() < order) throw std::invalid_argument("cf_identity_check needs S_1..S_order");
  if (sums.empty()) throw std::invalid_argument("cf_identity_check needs at least S_1");
  std::vector<CyclotomicNumber> trimmed(sums.begin(), sums.begin() + order);
  const auto c = characteristic_series(trimmed, q);
  const std::uint32_t p = sums.front().p();
  const unsigned m = sums.front().m();
  CfIdentityReport report;
  report.order = order;
  for (unsigned n = 0; n <= order; ++n) {
    CyclotomicNumber rhs(p, m);
    Integer qj = 1;
    for (unsigned j = 0; j <= n; ++j) {
      if (n - j < l_coeffs.size()) rhs += c[j] * l_coeffs[n - j] * Rational(qj);
      qj *= Integer(std::to_string(q));
    }
    if (!(rhs == c[n])) {
      report.passed = false;
      report.first_failure = n;
      return report;
    }
  }
  return report;
}

}  // namespace wittsum
