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

#include <vector>

#include "doctest.h"
#include "fpmul/cantor.hpp"
#include "test_support.hpp"

using namespace fpmul;
using testsupport::echelon_rank;
using testsupport::random_elem;

namespace {

template <class F>
void check_field_tables() {
  const auto& fld = CantorField<F>::get();
  using V = typename F::value_type;
  const V one = detail::unit_bit<V>(0);

  REQUIRE(fld.basis(0).v == one);
  for (unsigned i = 1; i < F::kDegree; ++i) {
    CAPTURE(i);
    REQUIRE((F::sqr(fld.basis(i).v) ^ fld.basis(i).v) == fld.basis(i - 1).v);
  }

  std::vector<V> rows(fld.cantor_rows().begin(), fld.cantor_rows().end());
  REQUIRE(echelon_rank(rows, F::kDegree) == F::kDegree);

  std::mt19937_64 rng(7 + F::kDegree);
  for (int i = 0; i < 500; ++i) {
    const CantorVec<F> c{random_elem<F>(rng)};
    REQUIRE(fld.poly_to_cantor(fld.cantor_to_poly(c)) == c);
  }
  for (unsigned i = 0; i < F::kDegree; ++i)
    REQUIRE(fld.cantor_to_poly(CantorVec<F>{detail::unit_bit<V>(i)}).v == fld.basis(i).v);
}

// Evaluating s_i at a field point two ways: the Cantor-coordinate shift, and
// i-fold application of y -> y^2 + y in the field.
template <class F>
void check_subspace_field_consistency(int samples) {
  const auto& fld = CantorField<F>::get();
  std::mt19937_64 rng(100 + F::kDegree);
  for (int s = 0; s < samples; ++s) {
    const CantorVec<F> a{random_elem<F>(rng)};
    FieldElem<F> y = fld.cantor_to_poly(a);
    for (unsigned i = 0; i <= F::kDegree; ++i) {
      CAPTURE(i);
      REQUIRE(fld.cantor_to_poly(subspace_eval(i, a)) == y);
      y = gf_add(gf_sqr(y), y);
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("cantor");

TEST_CASE("field tables: recurrence, rank, basis-change round trip") {
  check_field_tables<gf16>();
  check_field_tables<gf64>();
  check_field_tables<gf128>();
}

TEST_CASE("m=16 basis matches the leopard Cantor table") {
  // Independently published table for the same modulus (x^16+x^5+x^3+x^2+1).
  const uint16_t expected[16] = {0x0001, 0xACCA, 0x3C0E, 0x163E, 0xC582, 0xED2E,
                                 0x914C, 0x4012, 0x6C98, 0x10D8, 0x6A72, 0xB900,
                                 0xFDB8, 0xFB34, 0xFF38, 0x991E};
  const auto& fld = CantorField<gf16>::get();
  for (unsigned i = 0; i < 16; ++i) CHECK(fld.basis(i).v == expected[i]);
}

TEST_CASE("subspace evaluation agrees with the field-side s_1 composition") {
  check_subspace_field_consistency<gf16>(100);
  check_subspace_field_consistency<gf64>(100);
  check_subspace_field_consistency<gf128>(50);
}

TEST_CASE("m=16: formula order equals iterated-squaring order for every basis vector") {
  const auto& fld = CantorField<gf16>::get();
  for (unsigned i = 1; i < 16; ++i) {
    FieldElem<gf16> x = fld.basis(i);
    unsigned ord = 0;
    do {
      x = gf_sqr(x);
      ++ord;
    } while (!(x == fld.basis(i)) && ord <= 64);
    CAPTURE(i);
    CHECK(ord == frobenius_order_of_basis(i));
  }
  // v_0 = 1 is fixed by squaring
  CHECK(gf_sqr(CantorField<gf16>::get().basis(0)) == CantorField<gf16>::get().basis(0));
}

TEST_SUITE_END();
