// Copyright 2026 The fpmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>

#include "doctest.h"
#include "fpmul/gf.hpp"
#include "test_support.hpp"

using namespace fpmul;
using testsupport::bitserial_mul;
using testsupport::random_elem;

namespace {

template <class F>
void check_mul_against_bitserial(size_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const typename F::value_type one = detail::unit_bit<typename F::value_type>(0);
  for (size_t i = 0; i < samples; ++i) {
    const auto a = random_elem<F>(rng), b = random_elem<F>(rng);
    CAPTURE(i);
    REQUIRE(F::mul(a, one) == a);
    REQUIRE(F::mul(a, b) == bitserial_mul<F>(a, b));
  }
}

template <class F>
void check_ring_laws(size_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < samples; ++i) {
    const auto a = random_elem<F>(rng), b = random_elem<F>(rng), c = random_elem<F>(rng);
    REQUIRE(F::mul(a, b) == F::mul(b, a));
    REQUIRE(F::mul(F::mul(a, b), c) == F::mul(a, F::mul(b, c)));
    REQUIRE(F::mul(a, b ^ c) == (F::mul(a, b) ^ F::mul(a, c)));
    REQUIRE(F::sqr(a) == F::mul(a, a));
    REQUIRE(F::sqr(a ^ b) == (F::sqr(a) ^ F::sqr(b)));
  }
}

}  // namespace

TEST_SUITE_BEGIN("gf");

TEST_CASE("gf_add identities and XOR semantics") {
  std::mt19937_64 rng(1);
  FieldElem<gf64> zero{};
  for (int i = 0; i < 100; ++i) {
    FieldElem<gf64> a{rng()};
    CHECK(gf_add(a, zero) == a);
    CHECK(gf_add(a, a) == zero);
  }
  CHECK(gf_add(FieldElem<gf64>{0b0101}, FieldElem<gf64>{0b0011}).v == 0b0110);
}

TEST_CASE("gf64 reduction example: x * x^63 = x^4+x^3+x+1") {
  CHECK(gf64::mul(uint64_t{2}, uint64_t{1} << 63) == 0x1B);
}

TEST_CASE("gf_mul matches the bit-serial modular oracle") {
  check_mul_against_bitserial<gf16>(2000, 11);
  check_mul_against_bitserial<gf64>(2000, 12);
  check_mul_against_bitserial<gf128>(2000, 13);
}

TEST_CASE("gf16 exhaustive-scale oracle check (2^16 random pairs)") {
  check_mul_against_bitserial<gf16>(1u << 16, 14);
}

TEST_CASE("commutativity, associativity, distributivity, Frobenius additivity") {
  check_ring_laws<gf16>(10000, 21);
  check_ring_laws<gf64>(10000, 22);
  check_ring_laws<gf128>(10000, 23);
}

TEST_CASE("gf_sqr fixed points and definitional equivalence") {
  CHECK(gf64::sqr(0) == 0);
  CHECK(gf64::sqr(1) == 1);
  CHECK(gf128::sqr(u128{}) == u128{});
  CHECK(gf128::sqr(u128{0, 1}) == u128{0, 1});
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const uint64_t a = rng();
    CHECK(gf64::sqr(a) == gf64::mul(a, a));
  }
}

TEST_CASE("gf16: sixteen squarings return every element to itself") {
  for (uint32_t a = 0; a < (1u << 16); ++a) {
    uint16_t x = static_cast<uint16_t>(a);
    for (int i = 0; i < 16; ++i) x = gf16::sqr(x);
    REQUIRE(x == a);
  }
}

TEST_CASE("frobenius_order_of_basis formula values and rejection") {
  CHECK(frobenius_order_of_basis(1) == 2);
  CHECK(frobenius_order_of_basis(2) == 4);
  CHECK(frobenius_order_of_basis(3) == 4);
  CHECK(frobenius_order_of_basis(4) == 8);
  CHECK(frobenius_order_of_basis(7) == 8);
  CHECK(frobenius_order_of_basis(8) == 16);
  CHECK_THROWS_AS(frobenius_order_of_basis(0), std::invalid_argument);
}

TEST_CASE("subspace_eval is a plain shift with linearity") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const CantorVec<gf64> a{rng()}, b{rng()};
    CHECK(subspace_eval(0, a) == a);
    for (unsigned i = 0; i <= 64; ++i) {
      const auto lhs = subspace_eval(i, CantorVec<gf64>{a.bits ^ b.bits});
      CHECK(lhs.bits == (subspace_eval(i, a).bits ^ subspace_eval(i, b).bits));
    }
  }
  // e_5 shifted by 2 is e_3; anything inside V_3 dies under s_3
  CHECK(subspace_eval(2, CantorVec<gf16>{1u << 5}).bits == (1u << 3));
  for (uint16_t a = 0; a < 8; ++a) CHECK(subspace_eval(3, CantorVec<gf16>{a}).bits == 0);
}

TEST_SUITE_END();
