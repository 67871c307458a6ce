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
#include <vector>

#include "wittsum/cyclotomic.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

struct EngineOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Largest number of points a single sum may enumerate.
  std::uint64_t budget_points = kDefaultBudgetPoints;
};

/// Engine options with the spec's own budget.
EngineOptions engine_options_for(const SumSpec& spec, unsigned threads = 0);

/// counts[c] = #{x in the domain : Tr(f(x)) = c mod p^m}.
struct CharacterHistogram {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  CharacterHistogram& operator+=(const CharacterHistogram& other);
  bool operator==(const CharacterHistogram&) const = default;
};

struct SumResult {
  unsigned k = 0;
  /// Size of the domain: x in F_{q^k}^x minus the finite poles.
  std::uint64_t points = 0;
  CharacterHistogram histogram;
  CyclotomicNumber value;
  double seconds = 0;
};

/// S_f(k) by Teichmuller enumeration in GR(p^m, ak).
///
/// Each finite pole P contributes through the local parameter
/// Teich((x - P)^{-1}), evaluated by Horner in that parameter; the pole at
/// infinity uses Teich(x). Throws BudgetExceeded if q^k - 1 exceeds the budget.
SumResult char_sum(const SumSpec& spec, unsigned k, const EngineOptions& options = {});

/// S_f(k) by evaluating f inside W_m(F_{q^k}) with the universal Witt
/// polynomials, taking the Witt trace and applying omega at the prime level.
SumResult char_sum_witt(const SumSpec& spec, unsigned k, const EngineOptions& options = {});

/// S_f(1..max_k) in order. Entries already present in `prior` (a prefix of
/// the sequence) are kept and not recomputed.
std::vector<SumResult> sum_sequence(const SumSpec& spec, unsigned max_k, const EngineOptions& options = {},
                                    std::vector<SumResult> prior = {});

}  // namespace wittsum
