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

#include "wittsum/exp_sum.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "wittsum/errors.hpp"
#include "wittsum/witt.hpp"

namespace wittsum {
namespace {

using Evaluator = std::function<std::uint64_t(const FFElement&)>;

std::uint64_t domain_upper(const SumSpec& spec, unsigned k, const EngineOptions& options) {
  std::uint64_t order = 0;
  try {
    order = checked_pow(spec.q(), k);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("q^k = " + std::to_string(spec.q()) + "^" + std::to_string(k) + " overflows");
  }
  if (order - 1 > options.budget_points) {
    throw BudgetExceeded("S_f(" + std::to_string(k) + ") needs " + std::to_string(order - 1) +
                         " points, budget is " + std::to_string(options.budget_points));
  }
  return order;
}

// Enumerates indices [1, order) in contiguous chunks, one local histogram per chunk.
SumResult enumerate(const SumSpec& spec, const LiftedSum& lifted, std::uint64_t order, const EngineOptions& options,
                    const Evaluator& eval) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t pm = checked_pow(spec.p(), spec.m());
  const FiniteField& field = *lifted.field;
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  const std::uint64_t work = order - 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(work, 1)));

  std::vector<CharacterHistogram> partial(threads, CharacterHistogram{std::vector<std::uint64_t>(pm, 0)});
  std::vector<std::exception_ptr> failures(threads);
  auto run_chunk = [&](unsigned t) {
    try {
      const std::uint64_t lo = 1 + work * t / threads;
      const std::uint64_t hi = 1 + work * (t + 1) / threads;
      auto& counts = partial[t].counts;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        FFElement x = field.from_index(idx);
        bool at_pole = false;
        for (const auto& r : lifted.pole_residues) {
          if (r && *r == x) {
            at_pole = true;
            break;
          }
        }
        if (!at_pole) ++counts[eval(x)];
      }
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SumResult result;
  result.k = lifted.k;
  result.histogram.counts.assign(pm, 0);
  for (const auto& h : partial) result.histogram += h;
  result.points = result.histogram.total();
  result.value = CyclotomicNumber::from_histogram(spec.p(), spec.m(), result.histogram.counts);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

EngineOptions engine_options_for(const SumSpec& spec, unsigned threads) {
  return EngineOptions{threads, spec.budget_points()};
}

std::uint64_t CharacterHistogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

CharacterHistogram& CharacterHistogram::operator+=(const CharacterHistogram& other) {
  if (counts.size() != other.counts.size()) throw std::invalid_argument("histograms of different moduli");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

SumResult char_sum(const SumSpec& spec, unsigned k, const EngineOptions& options) {
  const std::uint64_t order = domain_upper(spec, k, options);
  const LiftedSum lifted = lift(spec, k);
  const GaloisRing& ring = *lifted.ring;
  const FiniteField& field = *lifted.field;
  const std::uint64_t p = spec.p();

  // Per pole: C_k = sum_i p^i a_{ijk}; constant terms gathered separately.
  struct Series {
    std::optional<FFElement> residue;
    std::vector<GRElement> coeffs;  // index k, k >= 1
  };
  std::vector<Series> series(spec.pole_count());
  for (std::size_t j = 0; j < series.size(); ++j) series[j].residue = lifted.pole_residues[j];
  GRElement constant = ring.zero();
  for (const auto& t : lifted.terms) {
    const GRElement c = ring.scale(t.coeff, checked_pow(p, t.level));
    if (t.exponent == 0) {
      constant = ring.add(constant, c);
      continue;
    }
    auto& coeffs = series[t.pole].coeffs;
    if (coeffs.size() <= t.exponent) coeffs.resize(t.exponent + 1, ring.zero());
    coeffs[t.exponent] = ring.add(coeffs[t.exponent], c);
  }
  std::erase_if(series, [](const Series& s) { return s.coeffs.empty(); });

  const Evaluator eval = [&](const FFElement& x) -> std::uint64_t {
    GRElement acc = constant;
    for (const auto& s : series) {
      const GRElement local = ring.teichmuller(s.residue ? field.inverse(field.sub(x, *s.residue)) : x);
      GRElement h = ring.zero();
      for (std::size_t e = s.coeffs.size(); e-- > 1;) h = ring.mul(ring.add(h, s.coeffs[e]), local);
      acc = ring.add(acc, h);
    }
    return ring.trace_to_base(acc);
  };
  return enumerate(spec, lifted, order, options, eval);
}

SumResult char_sum_witt(const SumSpec& spec, unsigned k, const EngineOptions& options) {
  const std::uint64_t order = domain_upper(spec, k, options);
  const LiftedSum lifted = lift(spec, k);
  const FiniteField& field = *lifted.field;
  const unsigned m = spec.m();
  WittUniversalPolys::get(spec.p(), m);

  const Evaluator eval = [&](const FFElement& x) -> std::uint64_t {
    WittVector acc = WittVector::zero(field, m);
    for (const auto& t : lifted.terms) {
      const auto& pole = lifted.pole_residues[t.pole];
      const FFElement base = pole ? field.inverse(field.sub(x, *pole)) : x;
      std::vector<FFElement> coords(m, field.zero());
      coords[t.level] = field.mul(t.residue, field.pow(base, t.exponent));
      acc = witt_add(acc, WittVector(std::move(coords)));
    }
    return omega_prime(witt_trace(acc));
  };
  return enumerate(spec, lifted, order, options, eval);
}

std::vector<SumResult> sum_sequence(const SumSpec& spec, unsigned max_k, const EngineOptions& options,
                                    std::vector<SumResult> prior) {
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (prior[i].k != i + 1) throw std::invalid_argument("prior sums must be S_f(1), S_f(2), ... in order");
  }
  if (prior.size() > max_k) prior.resize(max_k);
  for (unsigned k = static_cast<unsigned>(prior.size()) + 1; k <= max_k; ++k) prior.push_back(char_sum(spec, k, options));
  return prior;
}

}  // namespace wittsum
