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

#include "doctest.h"
#include "support/oracles.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/galois_ring.hpp"

using namespace wittsum;

namespace {

GaloisRing::Ptr gr9_2() {
  auto f9 = FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  return GaloisRing::create(f9, 2);
}

GRElement gel(const GaloisRing::Ptr& r, std::vector<std::int64_t> c) { return r->element(c); }

}  // namespace

TEST_SUITE("galois_ring") {
  TEST_CASE("construction guards") {
    auto f3 = FiniteField::create(3, 1);
    CHECK_THROWS_AS(GaloisRing::create(f3, 3), ValidationError);
    CHECK_NOTHROW(GaloisRing::create(f3, 2));
    auto r = GaloisRing::create(f3, 1);
    CHECK(r->modulus_value() == 3);
  }

  TEST_CASE("m = 1 coincides with the residue field") {
    auto f25 = FiniteField::create(5, 2);
    auto r = GaloisRing::create(f25, 1);
    for (const auto& x : f25->enumerate()) {
      for (const auto& y : f25->enumerate()) {
        CHECK(r->reduce(r->lift(x) * r->lift(y)) == x * y);
        CHECK(r->reduce(r->lift(x) + r->lift(y)) == x + y);
      }
      CHECK(r->teichmuller(x) == r->lift(x));
    }
  }

  TEST_CASE("GR(9,2) examples") {
    auto r = gr9_2();
    const GRElement t = r->generator();
    CHECK(r->frobenius_image() == gel(r, {0, 8}));
    CHECK(r->frobenius(t) == gel(r, {0, 8}));
    CHECK(r->inverse(t) == gel(r, {0, 8}));
    CHECK(r->trace_to_base(t) == 0);
    CHECK(r->trace_to_base(r->one()) == 2);
    CHECK(r->teichmuller(r->residue_field()->generator()) == t);
    CHECK(r->teichmuller(r->residue_field()->zero()) == r->zero());
    CHECK(r->teichmuller(r->residue_field()->one()) == r->one());
    CHECK_THROWS_AS(r->inverse(r->constant(3)), std::domain_error);
    CHECK_FALSE(r->is_unit(gel(r, {3, 6})));
  }

  TEST_CASE("Z/9 examples") {
    auto r = GaloisRing::create(FiniteField::create(3, 1), 2);
    CHECK(r->inverse(r->constant(2)) == r->constant(5));
    CHECK(r->teichmuller(r->residue_field()->constant(2)) == r->constant(8));
    CHECK_THROWS_AS(r->inverse(r->constant(3)), std::domain_error);
  }

  TEST_CASE("Teichmuller properties on GR(9,2) and GR(25,3)") {
    for (auto [p, n] : {std::pair{3u, 2u}, std::pair{5u, 3u}}) {
      auto f = FiniteField::create(p, n);
      auto r = GaloisRing::create(f, 2);
      const std::uint64_t q = f->order();
      for (const auto& x : f->enumerate()) {
        const GRElement tx = r->teichmuller(x);
        CHECK(r->pow(tx, q) == tx);
        CHECK(r->reduce(tx) == x);
        // sigma acts on Teichmuller elements as the p-th power.
        CHECK(r->frobenius(tx) == r->pow(tx, p));
        for (long b = 0; b < static_cast<long>(n); ++b) {
          CHECK(r->trace_to_base(r->frobenius_power(tx, b)) == r->trace_to_base(tx));
          CHECK(r->trace_to_base(r->pow(tx, testing::powmod(p, b, ~std::uint64_t{0}))) == r->trace_to_base(tx));
        }
        if (n == 2) {
          for (const auto& y : f->enumerate()) CHECK(r->teichmuller(x * y) == tx * r->teichmuller(y));
        }
      }
    }
  }

  TEST_CASE("Frobenius is a ring automorphism of order n") {
    auto f = FiniteField::create(3, 3);
    auto r = GaloisRing::create(f, 2);
    auto gen = testing::rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> a(3), b(3);
      for (auto& c : a) c = static_cast<std::int64_t>(testing::uniform(gen, 0, 8));
      for (auto& c : b) c = static_cast<std::int64_t>(testing::uniform(gen, 0, 8));
      const GRElement x = r->element(a), y = r->element(b);
      CHECK(r->frobenius(x * y) == r->frobenius(x) * r->frobenius(y));
      CHECK(r->frobenius(x + y) == r->frobenius(x) + r->frobenius(y));
      CHECK(r->frobenius_power(x, 3) == x);
      CHECK(r->trace_to_base(x + y) == (r->trace_to_base(x) + r->trace_to_base(y)) % 9);
      if (r->is_unit(x)) CHECK(x * r->inverse(x) == r->one());
    }
  }
}
