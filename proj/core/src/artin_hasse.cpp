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

#include "wittsum/artin_hasse.hpp"

#include <algorithm>

#include "wittsum/errors.hpp"

namespace wittsum {
namespace {

Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer power(std::uint64_t base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// 1 / (p^{e}(p - 1)).
Rational pi_valuation(std::uint32_t p, unsigned e) { return frac(1, power(p, e) * (p - 1)); }

std::string rat(const Rational& r) { return to_fraction_string(r); }

}  // namespace

AHSeries ah_coefficients(std::uint32_t p, std::optional<unsigned> truncation, unsigned N) {
  if (!is_prime(p)) throw ValidationError("Artin-Hasse series needs a prime p");
  if (truncation && *truncation == 0) throw ValidationError("truncation level k must be at least 1");
  AHSeries s{p, truncation, {Rational(1)}};
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc = 0;
    std::uint64_t pi = 1;
    for (unsigned i = 0; pi <= n && (!truncation || i <= *truncation); ++i, pi *= p) acc += s.u[n - pi];
    s.u.push_back(acc / n);
  }
  return s;
}

std::vector<ThetaRow> theta_valuation_bound_check(std::uint32_t p, unsigned k, unsigned N) {
  if (k == 0 || k >= p) throw ValidationError("theta bound needs 1 <= k < p");
  const AHSeries series = ah_coefficients(p, k, N);
  const Rational ord_pi = pi_valuation(p, k - 1);
  const Integer pk1 = power(p, k + 1);
  const Rational u_rate = (frac(1, p - 1) + (k + 1)) / Rational(pk1);
  std::vector<ThetaRow> rows;
  for (unsigned i = 0; i <= N; ++i) {
    const Rational& u = series.u[i];
    // u_{kn} counts homomorphisms C_{p^k} -> S_n over n!, never zero.
    if (u == 0) throw ArithmeticError("truncated Artin-Hasse coefficient u_" + std::to_string(i) + " vanishes");
    ThetaRow row;
    row.i = i;
    row.u_valuation = padic_valuation(u, p);
    row.valuation = row.u_valuation + ord_pi * i;
    row.bound = frac(Integer(i) * (p - k), pk1);
    row.u_bound = -u_rate * i;
    if (row.valuation < row.bound || row.u_valuation < row.u_bound) {
      throw ArithmeticError("theta bound violated at p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                            ", i=" + std::to_string(i) + ": v = " + rat(row.valuation) + " < " + rat(row.bound));
    }
    rows.push_back(row);
  }
  return rows;
}

void classical_integrality_check(std::uint32_t p, unsigned N) {
  const AHSeries series = ah_coefficients(p, std::nullopt, N);
  for (unsigned i = 0; i <= N; ++i) {
    if (series.u[i] != 0 && padic_valuation(series.u[i], p) < 0) {
      throw ArithmeticError("classical Artin-Hasse coefficient u_" + std::to_string(i) + " is not p-integral");
    }
  }
}

ValuationReport gamma_valuation(std::uint32_t p, unsigned k, unsigned j) {
  if (k == 0 || j >= k) throw ValidationError("gamma valuation needs 0 <= j < k");
  ValuationReport report;
  const Rational base = pi_valuation(p, k - 1);
  unsigned count = 0;
  for (unsigned i = 0; i <= j; ++i) {
    const Rational v = base * Rational(power(p, i)) - i;
    ++report.terms;
    if (!report.minimum || v < *report.minimum) {
      report.minimum = v;
      report.witness = {i};
      count = 1;
    } else if (v == *report.minimum) {
      ++count;
    }
  }
  report.bound = pi_valuation(p, k - 1 - j) - j;
  report.unique_min = count == 1;
  report.achieved = *report.minimum == report.bound;
  report.predicted_equality = true;
  if (!report.unique_min || report.witness.front() != j || !report.achieved) {
    throw ArithmeticError("gamma term minimum is not unique at i = j for p=" + std::to_string(p) +
                          ", k=" + std::to_string(k) + ", j=" + std::to_string(j));
  }
  return report;
}

ValuationReport fijn_valuation_analysis(const SumSpec& spec, unsigned level, unsigned pole, unsigned n,
                                        std::uint64_t max_terms) {
  if (level >= spec.m() || pole >= spec.pole_count()) throw ValidationError("level or pole index out of range");
  const std::uint32_t p = spec.p();
  const unsigned d = spec.level_degree(level, pole);
  ValuationReport report;
  if (n == 0) {
    report.minimum = Rational(0);
    report.achieved = report.unique_min = report.predicted_equality = true;
    report.terms = 1;
    return report;
  }
  if (d == 0) {
    report.bound = 0;
    return report;  // no terms: F_{ij,n} = 0 for n > 0
  }
  std::vector<unsigned> exponents;
  for (const auto& t : spec.terms()) {
    if (t.level == level && t.pole == pole && t.exponent > 0) exponents.push_back(t.exponent);
  }
  std::sort(exponents.begin(), exponents.end());

  const AHSeries series = ah_coefficients(p, std::nullopt, n);
  std::vector<Rational> vu;
  for (const auto& u : series.u) vu.push_back(padic_valuation(u, p));
  const Rational ord_pi = pi_valuation(p, spec.m() - level - 1);
  report.bound = ord_pi * n / d;
  report.predicted_equality = n % d == 0 && vu[n / d] == 0;

  unsigned count = 0;
  std::vector<unsigned> parts(exponents.size(), 0);
  // Depth-first over n_k for each exponent k, remaining weight `left`.
  auto recurse = [&](auto&& self, std::size_t idx, unsigned left, const Rational& partial, unsigned used) -> void {
    if (idx == exponents.size()) {
      if (left != 0) return;
      if (++report.terms > max_terms) throw BudgetExceeded("composition budget exceeded in F-term analysis");
      const Rational v = partial + ord_pi * used;
      if (!report.minimum || v < *report.minimum) {
        report.minimum = v;
        report.witness.clear();
        for (std::size_t t = 0; t < exponents.size(); ++t) {
          report.witness.push_back(exponents[t]);
          report.witness.push_back(parts[t]);
        }
        count = 1;
      } else if (v == *report.minimum) {
        ++count;
      }
      return;
    }
    const unsigned k = exponents[idx];
    for (unsigned c = 0; c * k <= left; ++c) {
      parts[idx] = c;
      self(self, idx + 1, left - c * k, partial + vu[c], used + c);
    }
    parts[idx] = 0;
  };
  recurse(recurse, 0, n, Rational(0), 0);

  if (report.minimum) {
    if (*report.minimum < report.bound) {
      throw ArithmeticError("F-term below its bound at level " + std::to_string(level) + ", pole " +
                            std::to_string(pole + 1) + ", n = " + std::to_string(n));
    }
    report.achieved = *report.minimum == report.bound;
    report.unique_min = count == 1;
  }
  return report;
}

ValuationReport fjn_valuation_analysis(const SumSpec& spec, unsigned pole, unsigned n, std::uint64_t max_terms) {
  if (pole >= spec.pole_count()) throw ValidationError("pole index out of range");
  const auto dominant = spec.dominant_level(pole);
  if (!dominant) throw ValidationError("pole " + std::to_string(pole + 1) + " carries no terms");
  const std::uint32_t p = spec.p();
  const unsigned m = spec.m();
  const unsigned i_j = *dominant;
  const unsigned d_dom = spec.level_degree(i_j, pole);

  ValuationReport report;
  report.bound = pi_valuation(p, m - i_j - 1) * n / d_dom;
  {
    const AHSeries series = ah_coefficients(p, std::nullopt, n);
    report.predicted_equality = n % d_dom == 0 && padic_valuation(series.u[n / d_dom], p) == 0;
  }
  if (n == 0) {
    report.minimum = Rational(0);
    report.achieved = report.unique_min = report.predicted_equality = true;
    report.witness.assign(m, 0);
    report.terms = 1;
    return report;
  }

  // Per level and per n' <= n: min term valuation and number of minimizers.
  struct Cell {
    std::optional<Rational> min;
    std::uint64_t count = 0;
  };
  std::vector<std::vector<Cell>> table(m, std::vector<Cell>(n + 1));
  std::vector<Rational> rate(m);
  for (unsigned i = 0; i < m; ++i) {
    const unsigned d = spec.level_degree(i, pole);
    rate[i] = d == 0 ? Rational(-1) : pi_valuation(p, m - i - 1) / d;
    for (unsigned k = 0; k <= n; ++k) {
      if (k == 0) {
        table[i][k] = {Rational(0), 1};
        continue;
      }
      if (d == 0) continue;
      const ValuationReport r = fijn_valuation_analysis(spec, i, pole, k, max_terms);
      report.terms += r.terms;
      if (!r.minimum) continue;
      table[i][k].min = r.minimum;
      // Minimizer count; unique_min distinguishes 1 from several.
      table[i][k].count = r.unique_min ? 1 : 2;
    }
  }

  // Splits n_0 + ... + n_{m-1} = n: bound-minimizer and term-minimizer.
  std::optional<Rational> best_bound;
  std::vector<unsigned> best_bound_split;
  unsigned bound_ties = 0;
  std::uint64_t min_count = 0;
  std::vector<unsigned> split(m, 0);
  // The bound ranges over every split; term valuations only over splits whose
  // factors are all nonempty.
  auto recurse = [&](auto&& self, unsigned i, unsigned left, const Rational& bound_acc,
                     const std::optional<Rational>& val_acc, std::uint64_t mult) -> void {
    const bool last = i + 1 == m;
    for (unsigned k = last ? left : 0; k <= left; ++k) {
      split[i] = k;
      if (k > 0 && rate[i] < 0) break;
      const Cell& cell = table[i][k];
      const Rational b = bound_acc + (k > 0 ? rate[i] * k : Rational(0));
      std::optional<Rational> v;
      if (val_acc && cell.min) v = *val_acc + *cell.min;
      const std::uint64_t c = v ? mult * cell.count : 0;
      if (!last) {
        self(self, i + 1, left - k, b, v, c);
        continue;
      }
      if (!best_bound || b < *best_bound) {
        best_bound = b;
        best_bound_split = split;
        bound_ties = 1;
      } else if (b == *best_bound) {
        ++bound_ties;
      }
      if (!v) continue;
      if (!report.minimum || *v < *report.minimum) {
        report.minimum = v;
        report.witness = split;
        min_count = c;
      } else if (*v == *report.minimum) {
        min_count += c;
      }
    }
    split[i] = 0;
  };
  recurse(recurse, 0, n, Rational(0), std::optional<Rational>(Rational(0)), 1);

  if (!best_bound || bound_ties != 1 || best_bound_split[i_j] != n || *best_bound != report.bound) {
    throw ArithmeticError("bound-minimizing level split is not concentrated at the dominant level for pole " +
                          std::to_string(pole + 1));
  }
  if (report.minimum) {
    if (*report.minimum < report.bound) {
      throw ArithmeticError("F_{j,n} term below its bound at pole " + std::to_string(pole + 1) +
                            ", n = " + std::to_string(n));
    }
    report.achieved = *report.minimum == report.bound;
    report.unique_min = min_count == 1;
  }
  return report;
}

AHBatteryResult run_ah_battery(const AHBatteryConfig& config) {
  AHBatteryResult result;
  for (auto p : config.primes) {
    const unsigned kmax = std::min<unsigned>(config.max_truncation, p - 1);
    for (unsigned k = 1; k <= kmax; ++k) {
      result.theta_rows += static_cast<unsigned>(theta_valuation_bound_check(p, k, config.max_index).size());
      for (unsigned j = 0; j < k; ++j) {
        gamma_valuation(p, k, j);
        ++result.gamma_cases;
      }
    }
    classical_integrality_check(p, config.max_index);
    ++result.integrality_primes;
  }
  return result;
}

}  // namespace wittsum
