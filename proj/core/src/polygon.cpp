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

#include "wittsum/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "wittsum/errors.hpp"

namespace wittsum {

RatPolygon RatPolygon::from_slopes(std::vector<Rational> slopes) {
  std::sort(slopes.begin(), slopes.end());
  RatPolygon poly;
  poly.slopes_ = std::move(slopes);
  Rational y = 0;
  for (std::size_t i = 0; i < poly.slopes_.size(); ++i) {
    y += poly.slopes_[i];
    const bool last = i + 1 == poly.slopes_.size();
    if (last || poly.slopes_[i + 1] != poly.slopes_[i]) poly.vertices_.emplace_back(static_cast<long>(i + 1), y);
  }
  return poly;
}

Rational RatPolygon::value_at(long x) const {
  if (x < 0 || x > length()) throw std::out_of_range("polygon evaluated outside its range");
  Rational y = 0;
  for (long i = 0; i < x; ++i) y += slopes_[static_cast<std::size_t>(i)];
  return y;
}

RatPolygon RatPolygon::scaled(const Rational& factor) const {
  std::vector<Rational> s = slopes_;
  for (auto& v : s) v *= factor;
  return from_slopes(std::move(s));
}

RatPolygon lower_convex_hull(const std::vector<std::optional<Rational>>& heights) {
  if (heights.empty() || !heights.front() || *heights.front() != 0) {
    throw std::invalid_argument("Newton polygon needs the point (0, 0)");
  }
  std::vector<std::pair<long, Rational>> hull;
  for (std::size_t n = 0; n < heights.size(); ++n) {
    if (!heights[n]) continue;
    const std::pair<long, Rational> pt{static_cast<long>(n), *heights[n]};
    // Pop while the last hull point lies on or above the segment to pt.
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull.back();
      const Rational lhs = (y2 - y1) * (pt.first - x1);
      const Rational rhs = (pt.second - y1) * (x2 - x1);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long dx = hull[i].first - hull[i - 1].first;
    Rational s = (hull[i].second - hull[i - 1].second) / dx;
    for (long k = 0; k < dx; ++k) slopes.push_back(s);
  }
  return RatPolygon::from_slopes(std::move(slopes));
}

RatPolygon newton_polygon(const LPolynomial& l) {
  std::vector<std::optional<Rational>> heights;
  for (const auto& c : l.coeffs) heights.push_back(padic_valuation(c));
  return lower_convex_hull(heights);
}

HodgeResult hodge_polygon(const SumSpec& spec, const HodgeOptions& options) {
  HodgeResult out;
  for (unsigned j = 0; j < spec.pole_count(); ++j) {
    const std::uint64_t D = spec.pole_degree(j);
    if (D == 0) continue;
    for (std::uint64_t n = 0; n <= D; ++n) {
      Rational s = options.scale * spec.a() * (Rational(Integer(std::to_string(n))) - options.offset) /
                   Rational(Integer(std::to_string(D)));
      out.verbatim.push_back(s);
      out.verbatim_pole.push_back(j);
    }
  }
  const long d = std::max(0L, static_cast<long>(out.verbatim.size()) - 2);
  std::vector<std::size_t> order(out.verbatim.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return out.verbatim[x] < out.verbatim[y]; });
  out.kept.assign(order.begin(), order.begin() + d);
  std::vector<Rational> slopes;
  for (auto idx : out.kept) slopes.push_back(out.verbatim[idx]);
  out.comparison = RatPolygon::from_slopes(std::move(slopes));
  return out;
}

Rational truncation_factor(const SumSpec& spec, unsigned pole) {
  const auto level = spec.dominant_level(pole);
  if (!level) throw ValidationError("pole " + std::to_string(pole + 1) + " has no dominant level");
  const long p = spec.p();
  Rational kappa(Integer((p - 1) * (p - static_cast<long>(spec.m() - *level))), Integer(p * p));
  kappa.canonicalize();
  if (kappa >= 1 || kappa <= 0) throw ArithmeticError("truncation factor outside (0, 1)");
  return kappa;
}

RatPolygon truncated_hodge_polygon(const SumSpec& spec, const HodgeOptions& options) {
  const HodgeResult hodge = hodge_polygon(spec, options);
  std::vector<Rational> slopes;
  for (auto idx : hodge.kept) slopes.push_back(hodge.verbatim[idx] * truncation_factor(spec, hodge.verbatim_pole[idx]));
  return RatPolygon::from_slopes(std::move(slopes));
}

AboveReport lies_above(const RatPolygon& upper, const RatPolygon& lower) {
  AboveReport report;
  const long n = std::min(upper.length(), lower.length());
  Rational yu = 0, yl = 0;
  report.worst_margin = 0;
  report.worst_x = 0;
  for (long x = 1; x <= n; ++x) {
    yu += upper.slopes()[static_cast<std::size_t>(x - 1)];
    yl += lower.slopes()[static_cast<std::size_t>(x - 1)];
    const Rational margin = yu - yl;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_x = x;
    }
  }
  report.above = report.worst_margin >= 0;
  return report;
}

CoincidencePrediction coincidence_predicate(const SumSpec& spec) {
  CoincidencePrediction out;
  out.applicable = true;
  for (unsigned j = 0; j < spec.pole_count(); ++j) {
    const auto level = spec.dominant_level(j);
    if (!level || *level != spec.m() - 1) {
      out.applicable = false;
      continue;
    }
    out.modulus = lcm_u64(out.modulus, spec.level_degree(*level, j));
  }
  out.predicted = out.applicable && spec.p() % out.modulus == 1 % out.modulus;
  return out;
}

}  // namespace wittsum
