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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wittsum/artin_hasse.hpp"
#include "wittsum/polygon.hpp"
#include "wittsum/sum_spec.hpp"

namespace wittsum {

/// Parses an input document:
///   { "p", "a", "m", "field_modulus"?, "poles": ["inf" | {"coeffs": [...]}],
///     "terms": [{"i", "j", "k", "coeff": {"coeffs": [...]}}],
///     "options"?: {"buffer", "budget_points", "permissive"} }
/// A document with a "spec" member (a saved report) is read through that
/// member. Schema problems raise ValidationError naming the field.
RawSumSpec parse_input(std::string_view document);

/// parse_input followed by SumSpec::validate.
SumSpec parse_spec(std::string_view document);

/// The validated spec as an input document (defaults explicit), pretty-printed.
std::string spec_echo(const SumSpec& spec);

enum class Command { validate, degree, sums, lfun, newton, hodge, compare, report };

/// Parses a subcommand name; throws ValidationError for unknown names.
Command parse_command(std::string_view name);
std::string_view command_name(Command command);

struct RunOptions {
  unsigned threads = 0;
  std::optional<std::uint64_t> budget_points;
  /// Largest k for `sums`.
  unsigned max_k = 1;
  std::optional<unsigned> buffer;
  HodgeOptions hodge;
  /// Divide every polygon height by a (v(q) = 1 display).
  bool normalize_by_a = false;
  /// Recompute every sum along the Witt-vector path in `report`.
  bool dual_path = true;
  /// Emit wall-clock timings. Off by default so reports replay byte-for-byte.
  bool timing = false;
};

/// A JSON document plus auxiliary exports (file name, contents).
struct RunReport {
  std::string json;
  std::vector<std::pair<std::string, std::string>> files;
  /// True when every check the command performed passed.
  bool passed = true;
};

RunReport run(Command command, const SumSpec& spec, const RunOptions& options);

/// Reduction job document:
///   { "poles": ["0", "inf", "3/2", ...], "H": [{"j", "i", "c"}],
///     "inputs": [[{"j", "i", "c"}, ...], ...], "random": {"count", "seed", "max_degree"}? }
/// Terms with i = 0 are constants; coefficients are "num/den" strings or integers.
RunReport run_cohomology(std::string_view document);

RunReport run_ah_battery_report(const AHBatteryConfig& config);

/// "x,num,den" rows for the polygon's integer points.
std::string polygon_csv(const RatPolygon& polygon);

}  // namespace wittsum
