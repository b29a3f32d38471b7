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

#include "fpmul/selftest.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include "fpmul/basis_convert.hpp"
#include "fpmul/butterfly.hpp"
#include "fpmul/cantor.hpp"
#include "fpmul/detail/bitmat.hpp"
#include "fpmul/encode.hpp"
#include "fpmul/polymul.hpp"

namespace fpmul {
namespace {

using detail::from_low_word;
using detail::test_bit;
using detail::unit_bit;
using detail::value_shr;

struct Ctx {
  const SelftestOptions& opts;
  std::ostream& log;
  SelftestReport report;
  std::mt19937_64 rng;

  explicit Ctx(const SelftestOptions& o, std::ostream& l) : opts(o), log(l), rng(o.seed) {}

  void check(const std::string& name, bool pass) {
    log << (pass ? "ok   " : "FAIL ") << name << '\n';
    if (!pass) {
      report.ok = false;
      report.failed_invariants.push_back(name);
    }
  }
  bool full() const { return opts.level == SelftestLevel::kFull; }
};

template <class F>
typename F::value_type rand_elem(std::mt19937_64& rng) {
  using V = typename F::value_type;
  if constexpr (F::kDegree == 16) return static_cast<V>(rng());
  if constexpr (F::kDegree == 64) return static_cast<V>(rng());
  if constexpr (F::kDegree == 128) return u128{rng(), rng()};
}

// Independent bit-serial shift-and-reduce multiplier (reduces as it goes, a
// different route than the clmul-and-fold in the library).
template <class F>
typename F::value_type bitserial_mul(typename F::value_type a, typename F::value_type b) {
  using V = typename F::value_type;
  V acc{};
  for (unsigned i = F::kDegree; i-- > 0;) {
    const bool carry = test_bit(acc, F::kDegree - 1);
    acc = static_cast<V>(acc << 1);
    if (carry) acc ^= from_low_word<V>(F::kModulusTail);
    if (test_bit(b, i)) acc ^= a;
  }
  return acc;
}

std::string field_tag(unsigned m) { return "m" + std::to_string(m); }

template <class F>
void gf_suite(Ctx& c) {
  using V = typename F::value_type;
  const std::string t = field_tag(F::kDegree);
  const auto& fld = CantorField<F>::get();
  const V one = unit_bit<V>(0);

  {
    bool ok = true;
    for (int i = 0; i < 256; ++i) {
      const V a = rand_elem<F>(c.rng);
      ok = ok && (a ^ V{}) == a && (a ^ a) == V{};
    }
    c.check("gf." + t + ".add identities", ok);
  }
  {
    bool ok = true;
    const size_t samples = (c.full() && F::kDegree == 16) ? 65536 : 10000;
    for (size_t i = 0; i < samples; ++i) {
      const V a = rand_elem<F>(c.rng), b = rand_elem<F>(c.rng);
      if (F::mul(a, one) != a) ok = false;
      if (F::mul(a, b) != bitserial_mul<F>(a, b)) ok = false;
      if (F::mul(a, b) != F::mul(b, a)) ok = false;
      if (F::sqr(a) != F::mul(a, a)) ok = false;
    }
    c.check("gf." + t + ".mul vs bit-serial oracle", ok);
  }
  {
    bool ok = true;
    for (size_t i = 0; i < 10000; ++i) {
      const V a = rand_elem<F>(c.rng), b = rand_elem<F>(c.rng), d = rand_elem<F>(c.rng);
      if (F::mul(F::mul(a, b), d) != F::mul(a, F::mul(b, d))) ok = false;
      if (F::mul(a, b ^ d) != (F::mul(a, b) ^ F::mul(a, d))) ok = false;
      if (F::sqr(a ^ b) != (F::sqr(a) ^ F::sqr(b))) ok = false;
    }
    c.check("gf." + t + ".ring laws + Frobenius additivity", ok);
  }
  {
    bool ok = fld.basis(0).v == one;
    for (unsigned i = 1; i < F::kDegree; ++i)
      if ((F::sqr(fld.basis(i).v) ^ fld.basis(i).v) != fld.basis(i - 1).v) ok = false;
    c.check("cantor." + t + ".basis recurrence v_i^2+v_i=v_{i-1}", ok);
  }
  {
    std::vector<V> rows(F::kDegree);
    for (unsigned i = 0; i < F::kDegree; ++i) rows[i] = fld.basis(i).v;
    c.check("cantor." + t + ".basis rank m",
            detail::bitmat_rank(rows.data(), F::kDegree) == F::kDegree);
  }
  {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      const CantorVec<F> cv{rand_elem<F>(c.rng)};
      if (fld.poly_to_cantor(fld.cantor_to_poly(cv)) != cv) ok = false;
    }
    for (unsigned i = 0; i < F::kDegree; ++i)
      if (fld.cantor_to_poly(CantorVec<F>{unit_bit<V>(i)}).v != fld.basis(i).v) ok = false;
    c.check("cantor." + t + ".basis-change round trip", ok);
  }
  {
    bool ok = true;
    for (int s = 0; s < 200; ++s) {
      const CantorVec<F> a{rand_elem<F>(c.rng)}, b{rand_elem<F>(c.rng)};
      for (unsigned i = 0; i <= F::kDegree; ++i) {
        if (subspace_eval(i, CantorVec<F>{static_cast<V>(a.bits ^ b.bits)}) !=
            CantorVec<F>{static_cast<V>(subspace_eval(i, a).bits ^ subspace_eval(i, b).bits)})
          ok = false;
      }
      // Shift route vs i-fold application of y -> y^2 + y on the field side.
      FieldElem<F> y = fld.cantor_to_poly(a);
      for (unsigned i = 0; i <= F::kDegree && ok; ++i) {
        if (fld.cantor_to_poly(subspace_eval(i, a)) != y) ok = false;
        y = gf_add(gf_sqr(y), y);
      }
    }
    c.check("subspace." + t + ".linearity and s_1-composition consistency", ok);
  }
}

void frobenius_order_suite(Ctx& c) {
  bool ok = frobenius_order_of_basis(1) == 2 && frobenius_order_of_basis(2) == 4 &&
            frobenius_order_of_basis(3) == 4;
  const auto& fld = CantorField<gf16>::get();
  for (unsigned i = 1; i < 16; ++i) {
    FieldElem<gf16> x = fld.basis(i);
    unsigned ord = 0;
    do {
      x = gf_sqr(x);
      ++ord;
    } while (!(x == fld.basis(i)) && ord <= 32);
    if (ord != frobenius_order_of_basis(i)) ok = false;
  }
  bool threw = false;
  try {
    frobenius_order_of_basis(0);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  c.check("frobenius.order formula (m16 iteration oracle, i=0 rejected)", ok && threw);

  if (c.full()) {
    bool all = true;
    for (uint32_t a = 0; a < 65536; ++a) {
      FieldElem<gf16> x{static_cast<uint16_t>(a)};
      for (int s = 0; s < 16; ++s) x = gf_sqr(x);
      if (x.v != a) all = false;
    }
    c.check("frobenius.m16 phi^16 = identity (exhaustive)", all);
  }
}

void basis_cvt_suite(Ctx& c) {
  {
    BitPoly f(4);
    f.set_bit(1);
    f.set_bit(3);
    basis_cvt(f);
    c.check("basis.n4 example (0,1,0,1)->(0,0,1,1)",
            !f.bit(0) && !f.bit(1) && f.bit(2) && f.bit(3));
  }
  {
    bool ok = true;
    for (unsigned lg = 1; lg <= (c.full() ? 16u : 14u); ++lg) {
      BitPoly f = random_bitpoly(size_t{1} << lg, c.rng);
      BitPoly g = f;
      basis_cvt(g);
      BitPoly r = g;
      i_basis_cvt(r);
      if (r != f) ok = false;
      BitPoly ref = f;
      reference::basis_cvt(ref);
      if (ref != g) ok = false;
    }
    c.check("basis.round trip + word-level vs reference", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      BitPoly f = random_bitpoly(256, c.rng), h = random_bitpoly(256, c.rng);
      BitPoly fh = f;
      fh ^= h;
      basis_cvt(f);
      basis_cvt(h);
      basis_cvt(fh);
      f ^= h;
      if (f != fh) ok = false;
    }
    c.check("basis.linearity", ok);
  }
}

template <class F>
void butterfly_suite(Ctx& c) {
  const std::string t = field_tag(F::kDegree);
  const auto& fld = CantorField<F>::get();
  {
    const auto plan0 = plan_butterflies<F>(0, CantorVec<F>{});
    const auto plan1 = plan_butterflies<F>(1, CantorVec<F>{});
    c.check("butterfly." + t + ".plan l=0 empty, l=1 base=0 multiplier 0",
            plan0.mults.empty() && plan1.mults.size() == 1 &&
                plan1.mults[0] == typename F::value_type{});
  }
  {
    bool ok = true;
    const unsigned lmax = c.full() ? 8 : 6;
    for (unsigned l = 1; l <= lmax; ++l) {
      const CantorVec<F> base{rand_elem<F>(c.rng)};
      const auto plan = plan_butterflies<F>(l, base);
      EvalVec<F> v(size_t{1} << l);
      for (auto& e : v) e.v = rand_elem<F>(c.rng);
      EvalVec<F> coeffs = v;
      lch_butterfly<F>(std::span<FieldElem<F>>(v), plan);
      for (size_t idx = 0; idx < v.size(); ++idx) {
        const CantorVec<F> pt{static_cast<typename F::value_type>(
            base.bits ^ from_low_word<typename F::value_type>(idx))};
        if (!(direct_eval<F>(std::span<const FieldElem<F>>(coeffs), pt) == v[idx])) ok = false;
      }
      EvalVec<F> back = v;
      i_lch_butterfly<F>(std::span<FieldElem<F>>(back), plan);
      if (back != coeffs) ok = false;
    }
    c.check("butterfly." + t + ".matches direct evaluation; inverse round trip", ok);
  }
  {
    // Cache-blocked / parallel schedules must be bit-identical to the naive
    // layer order.
    bool ok = true;
    for (unsigned l : {4u, 9u, 12u}) {
      const CantorVec<F> base{rand_elem<F>(c.rng)};
      const auto plan = plan_butterflies<F>(l, base);
      EvalVec<F> v(size_t{1} << l);
      for (auto& e : v) e.v = rand_elem<F>(c.rng);
      EvalVec<F> naive = v, blocked = v, parallel = v;
      reference::lch_butterfly<F>(std::span<FieldElem<F>>(naive), plan);
      lch_butterfly<F>(std::span<FieldElem<F>>(blocked), plan, ExecPolicy::kSerial, 64);
      lch_butterfly<F>(std::span<FieldElem<F>>(parallel), plan, ExecPolicy::kParallel, 256);
      if (blocked != naive || parallel != naive) ok = false;
    }
    c.check("butterfly." + t + ".blocked/parallel schedule bit-exact vs naive", ok);
  }
  {
    const auto spec = make_partition_spec<F>(2);
    const auto plan = plan_butterflies<F>(2 + F::kLogDegree, spec.base);
    bool ok = true;
    for (unsigned k = 0; k < F::kLogDegree; ++k) {
      // Virtual layer l+k, block 0 multiplier must be v_{m/2-k}.
      if (!(plan.multiplier(2 + k, 0) == fld.basis(F::kDegree / 2 - k))) ok = false;
    }
    c.check("butterfly." + t + ".virtual-layer multipliers are v_{m/2-k}", ok);
  }
}

template <class F>
void encode_suite(Ctx& c) {
  const std::string t = field_tag(F::kDegree);
  const auto& fld = CantorField<F>::get();
  const auto& mat = EncodeMatrix<F>::get();
  const unsigned m = F::kDegree;
  {
    const bool ok = mat.row(0).v == unit_bit<typename F::value_type>(0) &&
                    mat.row(1) == fld.basis(m / 2) &&
                    mat.row(3) == gf_mul(fld.basis(m / 2), fld.basis(m / 2 - 1));
    c.check("encode." + t + ".rows r_0=1, r_1=v_{m/2}, r_3=v_{m/2}v_{m/2-1}", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < (c.full() ? 10000 : 2000); ++i) {
      const auto x = rand_elem<F>(c.rng);
      FieldElem<F> naive{};
      for (unsigned j = 0; j < m; ++j)
        if (test_bit(x, j)) naive = gf_add(naive, mat.row(j));
      if (!(mat.m4r_mul(x) == naive)) ok = false;
    }
    c.check("encode." + t + ".m4r vs naive row-XOR", ok);
  }
  {
    // The named round-trip invariant; runs against a corrupted private copy
    // when fault injection is requested.
    EncodeMatrix<F> local;
    if (c.opts.corrupt_encode_matrix) local.corrupt_for_test();
    bool ok = true;
    for (unsigned l : {0u, 1u, 4u, 6u}) {
      const auto spec = make_partition_spec<F>(l);
      BitPoly a = random_bitpoly(m * spec.n_p, c.rng);
      const auto ev = encode<F>(a, spec, local);
      if (decode<F>(std::span<const FieldElem<F>>(ev), spec, local) != a) ok = false;
      const auto ref = reference::encode<F>(a, spec, local);
      if (ev != ref) ok = false;
    }
    c.check("encode." + t + ".encode/decode round-trip", ok);
  }
}

void transpose_suite(Ctx& c) {
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t m[64], orig[64];
    for (auto& w : m) w = c.rng();
    std::copy(std::begin(m), std::end(m), std::begin(orig));
    transpose64x64(m);
    // spot-check coordinates
    for (int probe = 0; probe < 16; ++probe) {
      const unsigned r = c.rng() % 64, col = c.rng() % 64;
      if (((orig[r] >> col) & 1) != ((m[col] >> r) & 1)) ok = false;
    }
    transpose64x64(m);
    if (!std::equal(std::begin(m), std::end(m), std::begin(orig))) ok = false;
  }
  c.check("encode.transpose64 involution and coordinate swap", ok);
}

void encode_virtual_layers_m16(Ctx& c) {
  bool ok = true;
  const unsigned lmax = c.full() ? 7 : 5;
  const int reps = c.full() ? 100 : 20;
  const auto& mat = EncodeMatrix<gf16>::get();
  for (unsigned l = 0; l <= lmax; ++l) {
    const auto spec = make_partition_spec<gf16>(l);
    const unsigned layers = l + 4;
    const auto plan = plan_butterflies<gf16>(layers, spec.base);
    for (int rep = 0; rep < reps; ++rep) {
      BitPoly a = random_bitpoly(size_t{16} << l, c.rng);
      EvalVec<gf16> wide(size_t{1} << layers);
      for (size_t k = 0; k < wide.size(); ++k) wide[k].v = a.bit(k) ? 1 : 0;
      reference::run_layers<gf16>(std::span<FieldElem<gf16>>(wide), plan, layers - 1, l);
      const auto enc = encode<gf16>(a, spec, mat);
      for (size_t i = 0; i < spec.n_p; ++i)
        if (!(enc[i] == wide[i])) ok = false;
    }
  }
  c.check("encode.m16 equals first n_p outputs of untruncated virtual layers", ok);
}

void partition_suite_m16(Ctx& c) {
  bool ok = true;
  const unsigned lmax = c.full() ? 7 : 4;
  const auto& fld = CantorField<gf16>::get();
  for (unsigned l = 0; l <= lmax; ++l) {
    const auto spec = make_partition_spec<gf16>(l);
    const auto iterates = enumerate_partition<gf16>(spec);
    if (iterates.size() != 16) ok = false;
    std::set<uint16_t> all;
    for (const auto& s : iterates) {
      if (s.size() != spec.n_p) ok = false;
      for (uint16_t e : s) all.insert(e);
    }
    if (all.size() != size_t{16} << l) ok = false;  // pairwise disjoint, |Omega| = n
    // phi maps V_l to itself
    std::set<uint16_t> vl, vl_img;
    for (uint32_t u = 0; u < (1u << l); ++u) {
      vl.insert(static_cast<uint16_t>(u));
      const auto p = fld.cantor_to_poly(CantorVec<gf16>{static_cast<uint16_t>(u)});
      vl_img.insert(fld.poly_to_cantor(gf_sqr(p)).bits);
    }
    if (vl != vl_img) ok = false;
    // Ord(Sigma) = 16: no earlier iterate may reproduce Sigma
    std::set<uint16_t> sigma(iterates[0].begin(), iterates[0].end());
    for (unsigned j = 1; j < 16; ++j) {
      std::set<uint16_t> s(iterates[j].begin(), iterates[j].end());
      if (s == sigma) ok = false;
    }
  }
  c.check("partition.m16 Frobenius partition structure for legal l", ok);
}

void polymul_suite(Ctx& c) {
  {
    const auto plan = plan_mul(size_t{1} << 20, size_t{1} << 20);
    bool ok = plan.n_bits == (size_t{1} << 21) && plan.field_degree == 64 && plan.l == 15 &&
              plan.n_p == (size_t{1} << 15);
    const auto plan2 = plan_mul(32, 32, FieldChoice::kGF64);
    ok = ok && plan2.n_bits == 64 && plan2.l == 0 && plan2.n_p == 1;
    bool rejected = false;
    try {
      plan_mul(size_t{1} << 39, size_t{1} << 39, FieldChoice::kGF64);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    c.check("polymul.plan examples and size-bound rejection", ok && rejected);
  }
  {
    bool ok = true;
    BitPoly one(1);
    one.set_bit(0);
    BitPoly b = random_bitpoly(5000, c.rng);
    if (fp_polymul(one, b) != b) ok = false;
    BitPoly xa(101), xb(57);
    xa.set_bit(100);
    xb.set_bit(56);
    const BitPoly prod = fp_polymul(xa, xb);
    if (prod.max_degree_plus_one() != 157 || !prod.bit(156)) ok = false;
    c.check("polymul.identity and monomial shift", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      const size_t la = 1 + c.rng() % 4000, lb = 1 + c.rng() % 4000;
      BitPoly a = random_bitpoly(la, c.rng), b = random_bitpoly(lb, c.rng);
      if (karatsuba_mul(a, b) != naive_mul(a, b)) ok = false;
    }
    c.check("polymul.karatsuba vs schoolbook", ok);
  }
  {
    bool ok = true;
    const unsigned max_lg = c.full() ? 16 : 14;
    for (unsigned lg = 10; lg <= max_lg; lg += 2) {
      for (int trial = 0; trial < 3; ++trial) {
        BitPoly a = random_bitpoly(size_t{1} << lg, c.rng);
        BitPoly b = random_bitpoly((size_t{1} << lg) - 7, c.rng);
        const BitPoly want = karatsuba_mul(a, b);
        MulOptions o64;
        o64.field = FieldChoice::kGF64;
        MulOptions o128;
        o128.field = FieldChoice::kGF128;
        if (fp_polymul(a, b, o64) != want) ok = false;
        if (fp_polymul(a, b, o128) != want) ok = false;
      }
    }
    c.check("polymul.fp_polymul vs karatsuba (both fields)", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < (c.full() ? 500 : 100); ++trial) {
      BitPoly a = random_bitpoly(1 + c.rng() % 1024, c.rng);
      if (!frobenius_value_check<gf64>(a, FieldElem<gf64>{c.rng()})) ok = false;
      if (!frobenius_value_check<gf128>(a, FieldElem<gf128>{u128{c.rng(), c.rng()}})) ok = false;
    }
    c.check("polymul.Frobenius identity C(a^2)=C(a)^2", ok);
  }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opts, std::ostream& log) {
  Ctx c(opts, log);
  gf_suite<gf16>(c);
  gf_suite<gf64>(c);
  gf_suite<gf128>(c);
  frobenius_order_suite(c);
  basis_cvt_suite(c);
  butterfly_suite<gf16>(c);
  butterfly_suite<gf64>(c);
  butterfly_suite<gf128>(c);
  encode_suite<gf16>(c);
  encode_suite<gf64>(c);
  encode_suite<gf128>(c);
  transpose_suite(c);
  encode_virtual_layers_m16(c);
  partition_suite_m16(c);
  polymul_suite(c);
  return c.report;
}

}  // namespace fpmul
