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

#include <string>

#include "doctest.h"
#include "support/battery.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/sum_spec.hpp"

using namespace wittsum;
using wittsum::testing::pt;
using wittsum::testing::make;
using wittsum::testing::term;

namespace {

std::string validation_message(const RawSumSpec& raw) {
  try {
    SumSpec::validate(raw);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("sum_spec") {
  TEST_CASE("single-level spec") {
    const SumSpec s = SumSpec::validate(make(3, 1, 2, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    CHECK(s.pole_degree(0) == 3);
    CHECK(s.dominant_level(0) == 0u);
    CHECK(s.level_degree(0, 1) == 1);
    CHECK(s.level_degree(1, 1) == 0);
    CHECK(degree_formula(s) == 6);
    CHECK(s.within_hypotheses());
  }

  TEST_CASE("degree formula examples") {
    CHECK(degree_formula(SumSpec::validate(
              make(5, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}))) == 2);
    CHECK(degree_formula(SumSpec::validate(
              make(7, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 3, {1}), term(0, 2, 1, {1})}))) == 4);
    for (const auto& entry : wittsum::testing::battery()) {
      CHECK_MESSAGE(degree_formula(SumSpec::validate(entry.raw)) == entry.expected_degree, entry.name);
    }
  }

  TEST_CASE("validation errors") {
    CHECK(validation_message(make(3, 1, 2, {pt({0}), std::nullopt},
                                  {term(0, 1, 1, {1}), term(1, 1, 3, {1}), term(0, 2, 1, {1})}))
              .find("p divides") != std::string::npos);
    CHECK(validation_message(make(3, 1, 2, {pt({0}), std::nullopt},
                                  {term(0, 1, 1, {1}), term(1, 1, 2, {1}), term(0, 2, 1, {1}), term(1, 2, 3, {1})}))
              .find("p divides") != std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 3, {1}), term(0, 2, 1, {1})}))
              .find("p divides d_{0,1} = 3") != std::string::npos);
    CHECK(validation_message(make(3, 1, 3, {pt({0}), std::nullopt}, {term(0, 1, 1, {1})})).find("p > m") !=
          std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), pt({3})}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}))
              .find("duplicate pole") != std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt}, {})).find("empty term list") !=
          std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1})}))
              .find("pole 2 carries no terms") != std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt}, {term(1, 1, 1, {1}), term(0, 2, 1, {1})}))
              .find("Witt level must be below m") != std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 3, 1, {1}), term(0, 2, 1, {1})}))
              .find("pole index out of range") != std::string::npos);
    CHECK(validation_message(make(3, 1, 1, {pt({0}), std::nullopt},
                                  {term(0, 1, 1, {1}), term(0, 1, 1, {2}), term(0, 2, 1, {1})}))
              .find("duplicate term") != std::string::npos);
    CHECK_THROWS_AS(SumSpec::validate(make(4, 1, 1, {pt({0})}, {term(0, 1, 1, {1})})), ValidationError);
    CHECK_THROWS_AS(SumSpec::validate(make(3, 2, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1})})),
                    ValidationError);
  }

  TEST_CASE("tied maximum is rejected") {
    // A tie p^{m-i-1} d_i = p^{m-i'-1} d_{i'} forces p | d_{i'}; both messages appear.
    const std::string msg = validation_message(
        make(3, 1, 2, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(1, 1, 3, {1}), term(0, 2, 1, {1})}));
    CHECK(msg.find("not uniquely achieved at pole 1") != std::string::npos);
    CHECK(msg.find("p divides") != std::string::npos);
  }

  TEST_CASE("all violations are reported together") {
    const std::string msg = validation_message(
        make(3, 1, 1, {pt({0}), pt({0})}, {term(0, 1, 3, {1}), term(0, 5, 1, {1})}));
    CHECK(msg.find("duplicate pole") != std::string::npos);
    CHECK(msg.find("pole index out of range") != std::string::npos);
    CHECK(msg.find("p divides") != std::string::npos);
  }

  TEST_CASE("defaults and hypothesis notes") {
    const SumSpec s = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    CHECK(s.echo().field_modulus == std::vector<std::uint32_t>{0, 1});
    CHECK(s.buffer() == kDefaultBuffer);
    CHECK(s.budget_points() == kDefaultBudgetPoints);

    const SumSpec no_zero =
        SumSpec::validate(make(5, 1, 1, {pt({1}), std::nullopt}, {term(0, 1, 1, {1}), term(0, 2, 1, {1})}));
    CHECK_FALSE(no_zero.within_hypotheses());
    CHECK(no_zero.hypothesis_notes() == std::vector<std::string>{"0 is not a pole"});

    RawSumSpec empty = make(3, 1, 1, {pt({0}), std::nullopt}, {});
    empty.permissive = true;
    const SumSpec e = SumSpec::validate(empty);
    CHECK(e.hypothesis_notes() == std::vector<std::string>{"empty term list"});
    CHECK(degree_formula(e) == 0);

    const SumSpec single = SumSpec::validate(make(3, 1, 1, {std::nullopt}, {term(0, 1, 1, {1})}));
    CHECK(single.hypothesis_notes() == std::vector<std::string>{"0 is not a pole", "single pole (l = 1)"});
  }

  TEST_CASE("zero coefficients are dropped and terms sorted") {
    const SumSpec s = SumSpec::validate(make(3, 1, 1, {pt({0}), std::nullopt},
                                             {term(0, 2, 1, {1}), term(0, 1, 2, {3}), term(0, 1, 1, {4})}));
    REQUIRE(s.terms().size() == 2);
    CHECK(s.terms()[0].pole == 0);
    CHECK(s.terms()[1].pole == 1);
    CHECK(s.level_degree(0, 0) == 1);
  }

  TEST_CASE("lift examples") {
    const SumSpec s = SumSpec::validate(make(3, 1, 2, {pt({0}), std::nullopt, pt({2})},
                                             {term(0, 1, 1, {2}), term(1, 2, 1, {1}), term(0, 3, 1, {1})}));
    const LiftedSum l1 = lift(s, 1);
    CHECK(l1.terms[0].coeff == l1.ring->constant(8));
    REQUIRE(l1.poles[2].has_value());
    CHECK(l1.ring->reduce(*l1.poles[2]) == *l1.pole_residues[2]);
    CHECK(*l1.poles[2] == l1.ring->constant(8));
    CHECK_FALSE(l1.poles[1].has_value());

    const LiftedSum l2 = lift(s, 2);
    CHECK(l2.field->degree() == 2);
    for (const auto& t : l2.terms) {
      CHECK(l2.ring->reduce(t.coeff) == t.residue);
      CHECK(l2.ring->pow(t.coeff, 9) == t.coeff);
    }
    CHECK_THROWS_AS(lift(s, 0), ValidationError);

    const SumSpec m1 = SumSpec::validate(make(5, 1, 1, {pt({0}), std::nullopt}, {term(0, 1, 1, {3}), term(0, 2, 1, {4})}));
    const LiftedSum lm = lift(m1, 1);
    for (const auto& t : lm.terms) CHECK(lm.ring->reduce(t.coeff) == t.residue);
    CHECK(lm.terms[0].coeff == lm.ring->lift(lm.terms[0].residue));
  }

  TEST_CASE("Frobenius conjugation") {
    const SumSpec s = SumSpec::validate(make(3, 2, 1, {pt({0}), std::nullopt, pt({0, 1})},
                                             {term(0, 1, 1, {0, 1}), term(0, 2, 1, {1}), term(0, 3, 1, {1, 1})},
                                             std::vector<std::uint32_t>{1, 0, 1}));
    const SumSpec c1 = SumSpec::validate(frobenius_conjugate(s, 1));
    CHECK(c1.poles()[2].point->coeffs() == s.field()->frobenius(*s.poles()[2].point).coeffs());
    const SumSpec c2 = SumSpec::validate(frobenius_conjugate(s, 2));
    CHECK(c2.echo().terms.size() == s.echo().terms.size());
    for (std::size_t i = 0; i < s.terms().size(); ++i) CHECK(c2.terms()[i].coeff.coeffs() == s.terms()[i].coeff.coeffs());
  }
}
