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

#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/finite_field.hpp"

using namespace wittsum;

namespace {

FFElement el(const FiniteField::Ptr& f, std::vector<std::int64_t> c) { return f->element(c); }

// Monic polynomials of degree n over F_p, constant term first, by index.
std::vector<std::uint32_t> monic_from_index(std::uint32_t p, unsigned n, std::uint64_t idx) {
  std::vector<std::uint32_t> g(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    g[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  g[n] = 1;
  return g;
}

}  // namespace

TEST_SUITE("finite_field") {
  TEST_CASE("construction and modulus choice") {
    auto f3 = FiniteField::create(3, 1);
    CHECK(f3->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(f3->order() == 3);
    auto f9 = FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->order() == 9);
    CHECK_THROWS_AS(FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 2, 1}), ValidationError);
    CHECK_THROWS_AS(FiniteField::create(4, 1), ValidationError);
    // Auto modulus: smallest monic irreducible, constant term compared first.
    auto auto9 = FiniteField::create(3, 2);
    CHECK(auto9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  }

  TEST_CASE("frobenius and trace on F_9 = F_3[t]/(t^2+1)") {
    auto f9 = FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    const FFElement t = f9->generator();
    CHECK(f9->frobenius(t) == el(f9, {0, 2}));
    CHECK(f9->trace_to_prime(t) == 0);
    CHECK(f9->trace_to_prime(f9->one()) == 2);
    CHECK(f9->enumerate().size() == 9);
    // t^2 = -1 by hand.
    CHECK(t * t == el(f9, {2}));
  }

  TEST_CASE("Rabin test agrees with the necklace count") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (unsigned n = 1; n <= 4; ++n) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= p;
        if (total > 700) continue;
        std::uint64_t count = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          const auto g = monic_from_index(p, n, idx);
          if (FiniteField::is_irreducible(p, g)) ++count;
        }
        CHECK_MESSAGE(count == testing::necklace_count(p, n), "p=" << p << " n=" << n);
      }
    }
  }

  TEST_CASE("field axioms on small fields") {
    for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{7u, 1u}}) {
      auto f = FiniteField::create(p, n);
      const auto all = f->enumerate();
      std::set<std::uint64_t> indices;
      for (const auto& x : all) indices.insert(f->index_of(x));
      CHECK(indices.size() == f->order());
      for (const auto& x : all) {
        CHECK(f->from_index(f->index_of(x)) == x);
        CHECK(f->pow(x, f->order()) == x);
        CHECK(f->frobenius_power(x, static_cast<long>(n)) == x);
        CHECK(f->frobenius_power(f->frobenius_power(x, -1), 1) == x);
        if (!x.is_zero()) CHECK(f->mul(x, f->inverse(x)) == f->one());
        for (const auto& y : all) {
          CHECK(f->frobenius(x * y) == f->frobenius(x) * f->frobenius(y));
          CHECK(f->frobenius(x + y) == f->frobenius(x) + f->frobenius(y));
          CHECK(f->trace_to_prime(x + y) == (f->trace_to_prime(x) + f->trace_to_prime(y)) % p);
        }
      }
      CHECK_THROWS_AS(f->inverse(f->zero()), std::domain_error);
    }
  }

  TEST_CASE("trace equals the sum of conjugates") {
    auto f = FiniteField::create(3, 3);
    for (const auto& x : f->enumerate()) {
      FFElement s = f->zero();
      for (long r = 0; r < 3; ++r) s = s + f->frobenius_power(x, r);
      CHECK(s.is_constant());
      CHECK(s[0] == f->trace_to_prime(x));
    }
  }

  TEST_CASE("embeddings") {
    auto f3 = FiniteField::create(3, 1);
    auto f9 = FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    auto f81 = FiniteField::create(3, 4);
    CHECK(embed(f3->constant(2), f81) == f81->constant(2));
    CHECK(embed(f9->generator(), f9) == f9->generator());
    FieldEmbedding e(f9, f81);
    const FFElement root = e.generator_image();
    CHECK(root * root + f81->one() == f81->zero());
    // The image is the smaller of the two roots.
    CHECK_FALSE(f81->neg(root) < root);
    for (const auto& x : f9->enumerate()) {
      CHECK(e(f9->frobenius(x)) == f81->frobenius(e(x)));
      for (const auto& y : f9->enumerate()) {
        CHECK(e(x * y) == e(x) * e(y));
        CHECK(e(x + y) == e(x) + e(y));
      }
    }
  }

  TEST_CASE("mismatched fields are rejected") {
    auto f9 = FiniteField::create(3, 2);
    auto f25 = FiniteField::create(5, 2);
    CHECK_THROWS(f9->add(f9->one(), f25->one()));
  }
}
