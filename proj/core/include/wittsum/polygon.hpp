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

#include <optional>
#include <utility>
#include <vector>

#include "wittsum/lfunction.hpp"
#include "wittsum/numeric.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

/// A convex polygon over [0, length] with integer x and rational heights,
/// starting at (0, 0). Vertices are the breakpoints (plus both endpoints);
/// `slopes` lists one slope per unit step, nondecreasing.
class RatPolygon {
 public:
  RatPolygon() : vertices_{{0, Rational(0)}} {}

  /// Polygon whose unit-step slopes are `slopes` sorted ascending.
  static RatPolygon from_slopes(std::vector<Rational> slopes);

  long length() const { return static_cast<long>(slopes_.size()); }
  const std::vector<std::pair<long, Rational>>& vertices() const { return vertices_; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  /// Height at integer x in [0, length].
  Rational value_at(long x) const;
  /// Every height multiplied by `factor` (> 0).
  RatPolygon scaled(const Rational& factor) const;

  bool operator==(const RatPolygon&) const = default;

 private:
  std::vector<std::pair<long, Rational>> vertices_;
  std::vector<Rational> slopes_;
};

/// Lower convex hull of the finite points (x_n = n, y_n); nullopt heights are
/// skipped. Points must include (0, 0) and be listed by increasing x.
RatPolygon lower_convex_hull(const std::vector<std::optional<Rational>>& heights);

/// Newton polygon of L from the pi-adic valuations of c_0..c_d (v(p) = 1).
RatPolygon newton_polygon(const LPolynomial& l);

struct HodgeOptions {
  /// Slope for pole j and index n is scale * a * (n - offset) / D_j.
  Rational scale = 1;
  Rational offset = 0;
};

struct HodgeResult {
  /// One entry per (j, n), n = 0..D_j, poles in order. Size sum_j (D_j + 1).
  std::vector<Rational> verbatim;
  /// Pole index of each verbatim entry.
  std::vector<unsigned> verbatim_pole;
  /// Positions (into `verbatim`) of the d smallest slopes, ties by position.
  std::vector<std::size_t> kept;
  /// Polygon of the d smallest verbatim slopes.
  RatPolygon comparison;
};

HodgeResult hodge_polygon(const SumSpec& spec, const HodgeOptions& options = {});

/// kappa_j = (p - 1)(p - (m - i_j)) / p^2.
Rational truncation_factor(const SumSpec& spec, unsigned pole);

/// The comparison slopes with each pole-j slope scaled by kappa_j.
RatPolygon truncated_hodge_polygon(const SumSpec& spec, const HodgeOptions& options = {});

struct AboveReport {
  bool above = true;
  /// min over integer x of upper(x) - lower(x), and the first x attaining it.
  Rational worst_margin = 0;
  long worst_x = 0;
};

/// Compares at every integer x of the shorter range.
AboveReport lies_above(const RatPolygon& upper, const RatPolygon& lower);

struct CoincidencePrediction {
  bool applicable = false;
  bool predicted = false;
  /// lcm_j d_{i_j, j}.
  std::uint64_t modulus = 1;
};

/// Applicable iff i_j = m - 1 for every pole; predicted iff p = 1 mod lcm_j d_{i_j,j}.
CoincidencePrediction coincidence_predicate(const SumSpec& spec);

}  // namespace wittsum
