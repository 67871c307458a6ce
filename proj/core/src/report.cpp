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

#include "wittsum/report.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"

#include "wittsum/cohomology.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/exp_sum.hpp"
#include "wittsum/lfunction.hpp"

namespace wittsum {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw ValidationError(path + "." + key + ": required field missing");
  return obj.at(key);
}

std::int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ValidationError(path + ": expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_nonneg(const Json& v, const std::string& path) {
  const std::int64_t x = as_int(v, path);
  if (x < 0) throw ValidationError(path + ": must be nonnegative");
  return static_cast<std::uint64_t>(x);
}

std::vector<std::int64_t> as_int_list(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::int64_t> as_field_element(const Json& v, const std::string& path) {
  return as_int_list(require(v, "coeffs", path), path + ".coeffs");
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json rational_json(const Rational& r) { return Json(to_fraction_string(r)); }

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Json cyclotomic_json(const CyclotomicNumber& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.numerator()) coeffs.push_back(integer_json(c));
  return Json{{"coeffs", coeffs}, {"den", integer_json(z.denominator())}};
}

Json polygon_json(const RatPolygon& poly) {
  Json vertices = Json::array();
  for (const auto& [x, y] : poly.vertices()) vertices.push_back(Json::array({x, to_fraction_string(y)}));
  return Json{{"vertices", vertices}, {"slopes", rationals_json(poly.slopes())}};
}

Json above_json(const AboveReport& r) {
  return Json{{"above", r.above}, {"worst_margin", rational_json(r.worst_margin)}, {"worst_x", r.worst_x}};
}

Json valuation_json(const ValuationReport& r) {
  Json out{{"bound", rational_json(r.bound)}};
  out["minimum"] = r.minimum ? rational_json(*r.minimum) : Json(nullptr);
  out["achieved"] = r.achieved;
  out["unique_min"] = r.unique_min;
  out["predicted_equality"] = r.predicted_equality;
  out["witness"] = r.witness;
  out["terms"] = r.terms;
  return out;
}

Json echo_json(const SumSpec& spec) {
  const RawSumSpec& e = spec.echo();
  Json doc;
  doc["p"] = e.p;
  doc["a"] = e.a;
  doc["m"] = e.m;
  doc["field_modulus"] = *e.field_modulus;
  Json poles = Json::array();
  for (const auto& pole : e.poles) {
    if (pole) poles.push_back(Json{{"coeffs", *pole}});
    else poles.push_back("inf");
  }
  doc["poles"] = poles;
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    terms.push_back(Json{{"i", t.level}, {"j", t.pole}, {"k", t.exponent}, {"coeff", Json{{"coeffs", t.coeff}}}});
  }
  doc["terms"] = terms;
  doc["options"] = Json{{"buffer", *e.buffer}, {"budget_points", *e.budget_points}, {"permissive", e.permissive}};
  return doc;
}

Json derived_json(const SumSpec& spec) {
  Json D = Json::array(), dominant = Json::array(), levels = Json::array();
  for (unsigned j = 0; j < spec.pole_count(); ++j) {
    D.push_back(spec.pole_degree(j));
    const auto lvl = spec.dominant_level(j);
    dominant.push_back(lvl ? Json(*lvl) : Json(nullptr));
  }
  for (unsigned i = 0; i < spec.m(); ++i) {
    Json row = Json::array();
    for (unsigned j = 0; j < spec.pole_count(); ++j) row.push_back(spec.level_degree(i, j));
    levels.push_back(row);
  }
  return Json{{"D", D}, {"dominant_level", dominant}, {"d", levels}};
}

std::string histogram_csv(const CharacterHistogram& h) {
  std::ostringstream out;
  out << "residue,count\n";
  for (std::size_t c = 0; c < h.counts.size(); ++c) out << c << "," << h.counts[c] << "\n";
  return out.str();
}

Json sum_json(const SumResult& s, bool timing) {
  Json out{{"k", s.k}, {"points", s.points}, {"value", cyclotomic_json(s.value)}, {"histogram", s.histogram.counts}};
  if (timing) out["seconds"] = s.seconds;
  return out;
}

EngineOptions engine(const SumSpec& spec, const RunOptions& options) {
  EngineOptions e = engine_options_for(spec, options.threads);
  if (options.budget_points) e.budget_points = *options.budget_points;
  return e;
}

RatPolygon displayed(const RatPolygon& poly, const SumSpec& spec, const RunOptions& options) {
  return options.normalize_by_a ? poly.scaled(Rational(1, spec.a())) : poly;
}

Rational parse_coefficient(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ValidationError(path + ": expected an integer or a \"num/den\" string");
}

PartialFraction parse_fraction(const Json& terms, const std::vector<QPole>& poles, const std::string& path) {
  if (!terms.is_array()) throw ValidationError(path + ": expected an array of terms");
  PartialFraction g(poles);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    const std::uint64_t j = as_nonneg(require(terms[t], "j", tp), tp + ".j");
    const std::uint64_t i = as_nonneg(require(terms[t], "i", tp), tp + ".i");
    const Rational c = parse_coefficient(require(terms[t], "c", tp), tp + ".c");
    if (i == 0) {
      g.add_constant(c);
      continue;
    }
    if (j < 1 || j > poles.size()) throw ValidationError(tp + ".j: pole index out of range");
    g.add_term(static_cast<unsigned>(j - 1), static_cast<unsigned>(i), c);
  }
  return g;
}

Json fraction_json(const PartialFraction& g) {
  Json terms = Json::array();
  if (g.constant_term() != 0) terms.push_back(Json{{"j", 0}, {"i", 0}, {"c", to_fraction_string(g.constant_term())}});
  for (unsigned j = 0; j < g.pole_count(); ++j) {
    for (const auto& [d, c] : g.part(j)) terms.push_back(Json{{"j", j + 1}, {"i", d}, {"c", to_fraction_string(c)}});
  }
  return terms;
}

}  // namespace

RawSumSpec parse_input(std::string_view document) {
  Json doc = parse_json(document);
  if (doc.is_object() && doc.contains("spec")) doc = doc.at("spec");
  if (!doc.is_object()) throw ValidationError("input: expected a JSON object");
  RawSumSpec raw;
  const std::uint64_t p = as_nonneg(require(doc, "p", "input"), "input.p");
  if (p > 0xFFFFFFFFu) throw ValidationError("input.p: too large");
  raw.p = static_cast<std::uint32_t>(p);
  raw.a = static_cast<unsigned>(as_nonneg(require(doc, "a", "input"), "input.a"));
  raw.m = static_cast<unsigned>(as_nonneg(require(doc, "m", "input"), "input.m"));
  if (doc.contains("field_modulus") && !doc["field_modulus"].is_null()) {
    std::vector<std::uint32_t> modulus;
    for (auto c : as_int_list(doc["field_modulus"], "input.field_modulus")) {
      if (c < 0 || static_cast<std::uint64_t>(c) >= raw.p) {
        throw ValidationError("input.field_modulus: coefficients must lie in [0, p)");
      }
      modulus.push_back(static_cast<std::uint32_t>(c));
    }
    raw.field_modulus = std::move(modulus);
  }
  const Json& poles = require(doc, "poles", "input");
  if (!poles.is_array()) throw ValidationError("input.poles: expected an array");
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const std::string path = "input.poles[" + std::to_string(j) + "]";
    if (poles[j].is_string()) {
      if (poles[j].get<std::string>() != "inf") throw ValidationError(path + ": the only string pole is \"inf\"");
      raw.poles.push_back(std::nullopt);
    } else {
      raw.poles.push_back(as_field_element(poles[j], path));
    }
  }
  const Json& terms = require(doc, "terms", "input");
  if (!terms.is_array()) throw ValidationError("input.terms: expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = "input.terms[" + std::to_string(t) + "]";
    RawTerm term;
    term.level = static_cast<unsigned>(as_nonneg(require(terms[t], "i", path), path + ".i"));
    term.pole = static_cast<unsigned>(as_nonneg(require(terms[t], "j", path), path + ".j"));
    term.exponent = static_cast<unsigned>(as_nonneg(require(terms[t], "k", path), path + ".k"));
    term.coeff = as_field_element(require(terms[t], "coeff", path), path + ".coeff");
    raw.terms.push_back(std::move(term));
  }
  if (doc.contains("options")) {
    const Json& opts = doc["options"];
    if (!opts.is_object()) throw ValidationError("input.options: expected an object");
    if (opts.contains("buffer")) raw.buffer = static_cast<unsigned>(as_nonneg(opts["buffer"], "input.options.buffer"));
    if (opts.contains("budget_points")) {
      raw.budget_points = as_nonneg(opts["budget_points"], "input.options.budget_points");
    }
    if (opts.contains("permissive")) {
      if (!opts["permissive"].is_boolean()) throw ValidationError("input.options.permissive: expected a boolean");
      raw.permissive = opts["permissive"].get<bool>();
    }
  }
  return raw;
}

SumSpec parse_spec(std::string_view document) { return SumSpec::validate(parse_input(document)); }

std::string spec_echo(const SumSpec& spec) { return echo_json(spec).dump(2) + "\n"; }

Command parse_command(std::string_view name) {
  static const std::pair<std::string_view, Command> table[] = {
      {"validate", Command::validate}, {"degree", Command::degree}, {"sums", Command::sums},
      {"lfun", Command::lfun},         {"newton", Command::newton}, {"hodge", Command::hodge},
      {"compare", Command::compare},   {"report", Command::report}};
  for (const auto& [n, c] : table) {
    if (n == name) return c;
  }
  throw ValidationError("unknown command: " + std::string(name));
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::validate: return "validate";
    case Command::degree: return "degree";
    case Command::sums: return "sums";
    case Command::lfun: return "lfun";
    case Command::newton: return "newton";
    case Command::hodge: return "hodge";
    case Command::compare: return "compare";
    case Command::report: return "report";
  }
  return "unknown";
}

std::string polygon_csv(const RatPolygon& polygon) {
  std::ostringstream out;
  out << "x,num,den\n";
  for (const auto& [x, y] : polygon.vertices()) out << x << "," << y.get_num() << "," << y.get_den() << "\n";
  return out.str();
}

RunReport run(Command command, const SumSpec& spec, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Json doc;
  doc["command"] = std::string(command_name(command));
  doc["spec"] = echo_json(spec);
  doc["derived"] = derived_json(spec);
  doc["within_hypotheses"] = spec.within_hypotheses();
  doc["hypothesis_notes"] = spec.hypothesis_notes();
  Json checks = Json::object();
  auto check = [&](const char* name, bool ok) {
    checks[name] = ok;
    report.passed = report.passed && ok;
  };

  const bool has_degree = spec.pole_count() >= 1;
  if (has_degree) doc["degree_formula"] = degree_formula(spec);

  const EngineOptions eng = engine(spec, options);

  if (command == Command::sums) {
    const auto sums = sum_sequence(spec, options.max_k, eng);
    Json arr = Json::array();
    for (const auto& s : sums) {
      arr.push_back(sum_json(s, options.timing));
      report.files.emplace_back("histogram_k" + std::to_string(s.k) + ".csv", histogram_csv(s.histogram));
    }
    doc["sums"] = arr;
  }

  std::optional<LFunctionResult> lfun;
  if (command == Command::lfun || command == Command::newton || command == Command::compare ||
      command == Command::report) {
    lfun = lfun_polynomial(spec, options.buffer, eng);
    Json sums = Json::array();
    for (const auto& s : lfun->sums) sums.push_back(sum_json(s, options.timing));
    doc["sums"] = sums;
    Json coeffs = Json::array();
    for (const auto& c : lfun->polynomial.coeffs) coeffs.push_back(cyclotomic_json(c));
    Json tail = Json::array();
    for (std::size_t n = lfun->polynomial.coeffs.size(); n < lfun->series.size(); ++n) {
      tail.push_back(cyclotomic_json(lfun->series[n]));
    }
    doc["lfunction"] = Json{{"degree", lfun->polynomial.degree},
                            {"expected_degree", lfun->expected_degree},
                            {"buffer", lfun->buffer},
                            {"degree_checked", lfun->polynomial.degree_checked},
                            {"coefficients", coeffs},
                            {"tail", tail}};
    check("degree", !lfun->polynomial.degree_checked || lfun->polynomial.degree == lfun->expected_degree);
    check("integrality", true);
    for (const auto& s : lfun->sums) {
      report.files.emplace_back("histogram_k" + std::to_string(s.k) + ".csv", histogram_csv(s.histogram));
    }
  }

  std::optional<RatPolygon> np;
  if (lfun && command != Command::lfun) {
    np = newton_polygon(lfun->polynomial);
    doc["newton"] = polygon_json(displayed(*np, spec, options));
    check("newton_starts_at_origin", np->vertices().front().first == 0 && np->vertices().front().second == 0);
    report.files.emplace_back("newton.csv", polygon_csv(displayed(*np, spec, options)));
  }

  if (command == Command::hodge || command == Command::compare || command == Command::report) {
    const HodgeResult hodge = hodge_polygon(spec, options.hodge);
    const RatPolygon truncated = truncated_hodge_polygon(spec, options.hodge);
    Json kappa = Json::array();
    for (unsigned j = 0; j < spec.pole_count(); ++j) {
      kappa.push_back(spec.dominant_level(j) ? rational_json(truncation_factor(spec, j)) : Json(nullptr));
    }
    doc["hodge"] = Json{{"verbatim_slopes", rationals_json(hodge.verbatim)},
                        {"verbatim_pole", hodge.verbatim_pole},
                        {"scale", rational_json(options.hodge.scale)},
                        {"offset", rational_json(options.hodge.offset)},
                        {"comparison", polygon_json(displayed(hodge.comparison, spec, options))},
                        {"truncation_factors", kappa},
                        {"truncated", polygon_json(displayed(truncated, spec, options))}};
    report.files.emplace_back("hodge.csv", polygon_csv(displayed(hodge.comparison, spec, options)));
    report.files.emplace_back("truncated_hodge.csv", polygon_csv(displayed(truncated, spec, options)));
    const AboveReport hodge_truncated = lies_above(hodge.comparison, truncated);
    Json cmp{{"hodge_above_truncated", above_json(hodge_truncated)}};
    check("hodge_above_truncated", hodge_truncated.above);
    if (np) {
      const AboveReport np_hodge = lies_above(*np, hodge.comparison);
      cmp["newton_above_hodge"] = above_json(np_hodge);
      check("newton_above_hodge", np_hodge.above);
      const CoincidencePrediction pred = coincidence_predicate(spec);
      cmp["coincidence"] = Json{{"applicable", pred.applicable},
                                {"predicted", pred.predicted},
                                {"modulus", pred.modulus},
                                {"observed_newton_slopes", rationals_json(np->slopes())},
                                {"observed_equal", np->slopes() == hodge.comparison.slopes()}};
    }
    if (command != Command::hodge) doc["comparison"] = cmp;
    else doc["hodge"]["comparison_checks"] = cmp;
  }

  if (command == Command::report) {
    std::vector<CyclotomicNumber> values;
    for (const auto& s : lfun->sums) values.push_back(s.value);
    const auto order = static_cast<unsigned>(values.size());
    const CfIdentityReport cf = cf_identity_check(values, lfun->polynomial.coeffs, spec.q(), order);
    doc["cf_identity"] = Json{{"passed", cf.passed},
                              {"order", cf.order},
                              {"first_failure", cf.first_failure ? Json(*cf.first_failure) : Json(nullptr)}};
    check("cf_identity", cf.passed);
    if (options.dual_path) {
      bool agree = true;
      Json per_k = Json::array();
      for (const auto& s : lfun->sums) {
        const SumResult w = char_sum_witt(spec, s.k, eng);
        const bool same = w.histogram == s.histogram;
        per_k.push_back(Json{{"k", s.k}, {"agree", same}});
        agree = agree && same;
      }
      doc["dual_path"] = per_k;
      check("dual_path", agree);
    }
    Json fterms = Json::array();
    for (unsigned j = 0; j < spec.pole_count(); ++j) {
      if (!spec.dominant_level(j)) continue;
      for (unsigned n = 0; n <= 3 * spec.pole_degree(j); ++n) {
        const ValuationReport r = fjn_valuation_analysis(spec, j, n);
        Json entry = valuation_json(r);
        entry["j"] = j + 1;
        entry["n"] = n;
        fterms.push_back(entry);
      }
    }
    doc["f_terms"] = fterms;
  }

  doc["checks"] = checks;
  doc["passed"] = report.passed;
  if (options.timing) {
    doc["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  report.json = doc.dump(2) + "\n";
  report.files.emplace_back("spec.json", spec_echo(spec));
  return report;
}

RunReport run_cohomology(std::string_view document) {
  const Json doc = parse_json(document);
  const Json& pole_list = require(doc, "poles", "input");
  if (!pole_list.is_array()) throw ValidationError("input.poles: expected an array");
  std::vector<QPole> poles;
  for (std::size_t j = 0; j < pole_list.size(); ++j) {
    const Json& v = pole_list[j];
    if (v.is_string() && v.get<std::string>() == "inf") poles.push_back(std::nullopt);
    else poles.push_back(parse_coefficient(v, "input.poles[" + std::to_string(j) + "]"));
  }
  const PartialFraction H = parse_fraction(require(doc, "H", "input"), poles, "input.H");
  const ReductionBasis basis = reduction_basis(H);

  std::vector<PartialFraction> inputs;
  if (doc.contains("inputs")) {
    const Json& list = doc["inputs"];
    if (!list.is_array()) throw ValidationError("input.inputs: expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
      inputs.push_back(parse_fraction(list[n], poles, "input.inputs[" + std::to_string(n) + "]"));
    }
  }
  if (doc.contains("random")) {
    const Json& r = doc["random"];
    const std::uint64_t count = as_nonneg(require(r, "count", "input.random"), "input.random.count");
    const std::uint64_t seed = r.contains("seed") ? as_nonneg(r["seed"], "input.random.seed") : 1;
    const std::uint64_t max_degree =
        r.contains("max_degree") ? as_nonneg(r["max_degree"], "input.random.max_degree") : 6;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (std::uint64_t n = 0; n < count; ++n) {
      PartialFraction g(poles);
      g.add_constant(coeff(rng));
      for (unsigned j = 0; j < poles.size(); ++j) {
        for (unsigned d = 1; d <= max_degree; ++d) {
          const long num = coeff(rng);
          const long den = static_cast<long>(1 + rng() % 4);
          g.add_term(j, d, make_rational(num, den));
        }
      }
      inputs.push_back(g);
    }
  }

  RunReport report;
  Json out;
  out["command"] = "cohom";
  out["R"] = basis.R;
  out["h0_dimension"] = h0_dimension(basis.R);
  Json elems = Json::array();
  for (const auto& e : basis.elements) elems.push_back(Json{{"j", e.pole ? *e.pole + 1 : 0}, {"i", e.degree}});
  out["basis"] = elems;
  Json results = Json::array();
  for (const auto& g : inputs) {
    const ReductionResult r = reduce(g, H);
    const ReductionResult lin = reduce_by_linear_solve(g, H);
    const bool agree = lin.residue == r.residue;
    results.push_back(Json{{"input", fraction_json(g)},
                           {"residue", fraction_json(r.residue)},
                           {"witness", fraction_json(r.witness)},
                           {"steps", r.steps},
                           {"fallback", r.used_fallback},
                           {"certificate", r.certificate_ok},
                           {"linear_solve_agrees", agree}});
    report.passed = report.passed && r.certificate_ok && agree;
  }
  out["reductions"] = results;
  out["passed"] = report.passed;
  report.json = out.dump(2) + "\n";
  return report;
}

RunReport run_ah_battery_report(const AHBatteryConfig& config) {
  const AHBatteryResult r = run_ah_battery(config);
  Json out{{"command", "ah-battery"},
           {"primes", config.primes},
           {"max_truncation", config.max_truncation},
           {"max_index", config.max_index},
           {"theta_rows", r.theta_rows},
           {"gamma_cases", r.gamma_cases},
           {"integrality_primes", r.integrality_primes},
           {"passed", true}};
  RunReport report;
  report.json = out.dump(2) + "\n";
  return report;
}

}  // namespace wittsum
