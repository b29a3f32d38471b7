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

#include "fpmul/basis_convert.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fpmul/detail/parallel.hpp"

namespace fpmul {
namespace {

// The conversion unrolls into a fixed sequence of fold passes. Writing a
// polynomial of `count` coefficients (each `unit` bits) in base s_T digits,
// the divisions by the two-term (z^T + z)^(2^j) fold the top half of each
// aligned s*unit-span down by D = (s/2 - s/(2T))*unit bits; recursing on the
// digit-level polynomial and on each digit yields more such passes, and
// sibling frames tile the array with identical schedules, so every pass
// applies uniformly to all aligned spans of its size.
//
// Within one span of S bits (half = S/2, D in [S/4, S/2)), the fold
// telescopes into order-free forms whose sources are never written:
//
//   forward:  y[q] = x[q] ^ x[q+D] ^ (q+2D < S ? x[q+2D] : 0)
//   inverse:  x[q] = y[q] ^ y[q+D]
//
// for q in [half-D, S-D); everything else is untouched. Streamed with
// ascending q these read ahead of every write, so a pass is one sweep.
//
// Passes with S <= 256 bits run fused: one sweep loads four words, applies
// every consecutive such pass in registers, and stores once. Larger passes
// complete tile by tile (tile = the digit size), keeping each tile
// cache-resident through all of its remaining passes.

struct Pass {
  size_t span_bits;
  size_t shift;
};

// Largest 2^(2^k) <= count/2 (count >= 4, a power of two).
size_t digit_size(size_t count) {
  size_t t = 2;
  while (t * t <= count / 2) t *= t;
  return t;
}

void build_schedule(std::vector<Pass>& out, size_t count, size_t unit) {
  if (count <= 2) return;
  const size_t t = digit_size(count);
  for (size_t s = count; s >= 2 * t; s /= 2)
    out.push_back({s * unit, (s / 2 - s / (2 * t)) * unit});
  build_schedule(out, count / t, unit * t);
  build_schedule(out, t, unit);
}

inline uint64_t read_bits64(const uint64_t* w, size_t nwords, size_t pos) {
  const size_t iw = pos / 64, ib = pos % 64;
  uint64_t v = w[iw] >> ib;
  if (ib && iw + 1 < nwords) v |= w[iw + 1] << (64 - ib);
  return v;
}

inline void xor_bits(uint64_t* w, size_t pos, uint64_t val, unsigned nbits) {
  const size_t iw = pos / 64, ib = pos % 64;
  if (nbits < 64) val &= (uint64_t{1} << nbits) - 1;
  w[iw] ^= val << ib;
  if (ib && ib + nbits > 64) w[iw + 1] ^= val >> (64 - ib);
}

// dst ^= bits [src, src+len); ascending, so with dst < src the reads stay
// ahead of the writes and see pre-pass values even when the ranges overlap.
void xor_stream1(uint64_t* w, size_t nwords, size_t dst, size_t src, size_t len) {
  const unsigned head = static_cast<unsigned>((64 - (dst & 63)) & 63);
  if (head) {
    const unsigned n = head < len ? head : static_cast<unsigned>(len);
    xor_bits(w, dst, read_bits64(w, nwords, src), n);
    dst += n;
    src += n;
    len -= n;
    if (!len) return;
  }
  const size_t full = len / 64;
  if (full) {
    uint64_t* d = w + dst / 64;
    const size_t sw = src / 64;
    const unsigned off = src & 63;
    if (off == 0) {
      const uint64_t* s = w + sw;
      for (size_t i = 0; i < full; ++i) d[i] ^= s[i];
    } else {
      uint64_t cur = w[sw];
      for (size_t i = 0; i < full; ++i) {
        const uint64_t nxt = w[sw + i + 1];
        d[i] ^= (cur >> off) | (nxt << (64 - off));
        cur = nxt;
      }
    }
    dst += full * 64;
    src += full * 64;
    len -= full * 64;
  }
  if (len) xor_bits(w, dst, read_bits64(w, nwords, src), static_cast<unsigned>(len));
}

// dst ^= bits[src1..] ^ bits[src2..] for len2 bits, then dst ^= bits[src1..]
// alone for the remaining len1 - len2 bits (src1 = dst + D, src2 = dst + 2D).
void xor_stream2(uint64_t* w, size_t nwords, size_t dst, size_t D, size_t len1, size_t len2) {
  size_t src1 = dst + D, src2 = dst + 2 * D;
  size_t len = len2;
  const unsigned head = static_cast<unsigned>((64 - (dst & 63)) & 63);
  if (head) {
    const unsigned n = head < len ? head : static_cast<unsigned>(len);
    xor_bits(w, dst, read_bits64(w, nwords, src1) ^ read_bits64(w, nwords, src2), n);
    dst += n;
    src1 += n;
    src2 += n;
    len -= n;
  }
  if (len / 64) {
    const size_t full = len / 64;
    uint64_t* d = w + dst / 64;
    const size_t s1 = src1 / 64, s2 = src2 / 64;
    const unsigned o1 = src1 & 63, o2 = src2 & 63;
    uint64_t c1 = w[s1], c2 = w[s2];
    for (size_t i = 0; i < full; ++i) {
      const uint64_t n1 = w[s1 + i + 1];
      const uint64_t n2 = s2 + i + 1 < nwords ? w[s2 + i + 1] : 0;
      const uint64_t v1 = o1 ? (c1 >> o1) | (n1 << (64 - o1)) : c1;
      const uint64_t v2 = o2 ? (c2 >> o2) | (n2 << (64 - o2)) : c2;
      d[i] ^= v1 ^ v2;
      c1 = n1;
      c2 = n2;
    }
    dst += full * 64;
    src1 += full * 64;
    src2 += full * 64;
    len -= full * 64;
  }
  if (len)
    xor_bits(w, dst, read_bits64(w, nwords, src1) ^ read_bits64(w, nwords, src2),
             static_cast<unsigned>(len));
  // Tail bits fed by src1 only.
  xor_stream1(w, nwords, dst + len, src1 + len, len1 - len2);
}

// One pass over [off, off+range): fold every aligned span.
void apply_big_pass(uint64_t* w, size_t nwords, size_t off, size_t range, Pass p, bool inverse,
                    bool parallel, size_t zero_from) {
  const size_t S = p.span_bits, D = p.shift, half = S / 2;
  const long long nspans = static_cast<long long>(range / S);
  const bool par_spans = parallel && nspans >= 4 && range >= (size_t{1} << 18);
  detail::par_for(par_spans, nspans, [&](long long k) {
    const size_t base = off + static_cast<size_t>(k) * S;
    if (base + half >= zero_from) return;  // sources all zero: fold is a no-op
    if (!inverse)
      xor_stream2(w, nwords, base + half - D, D, half, half - D);
    else
      xor_stream1(w, nwords, base + half - D, base + half, half);
  });
}

// One fused chunk of the sub-word / four-word passes. For spans up to a word
// the sources are selected by a replicated mask on the pre-op word; for
// 128/256-bit spans the folds read a saved copy of the four-word block.
struct TailOp {
  uint64_t mask1 = 0;  // nonzero: in-word op; sources [mid, top) replicated
  uint64_t mask2 = 0;  // second source [mid+D, top), forward only
  unsigned shift = 0;  // D
  unsigned span = 0;   // > 64: block-level op
  bool forward = true;
};

void emit_tail_ops(std::vector<TailOp>& ops, Pass p, size_t nbits, bool inverse) {
  const unsigned S = static_cast<unsigned>(p.span_bits);
  const unsigned D = static_cast<unsigned>(p.shift);
  TailOp op;
  op.shift = D;
  op.forward = !inverse;
  if (S <= 64) {
    auto span_mask = [&](unsigned lo, unsigned hi) {
      const uint64_t unit_mask = ((uint64_t{1} << (hi - lo)) - 1) << lo;
      uint64_t m = 0;
      const unsigned width = nbits < 64 ? static_cast<unsigned>(nbits) : 64;
      for (unsigned posn = 0; posn + S <= width; posn += S) m |= unit_mask << posn;
      return m;
    };
    op.mask1 = span_mask(S / 2, S);
    op.mask2 = inverse ? 0 : span_mask(S / 2 + D, S);
    op.span = S;
  } else {
    op.span = S;
  }
  ops.push_back(op);
}

inline void local_xor_range(uint64_t dstw[4], const uint64_t srcw[4], unsigned dst, unsigned src,
                            unsigned len) {
  while (len) {
    const unsigned n = len < 64 ? len : 64;
    uint64_t v = srcw[src >> 6] >> (src & 63);
    if ((src & 63) && (src >> 6) + 1 < 4) v |= srcw[(src >> 6) + 1] << (64 - (src & 63));
    if (n < 64) v &= (uint64_t{1} << n) - 1;
    dstw[dst >> 6] ^= v << (dst & 63);
    if ((dst & 63) && (dst & 63) + n > 64) dstw[(dst >> 6) + 1] ^= v >> (64 - (dst & 63));
    src += n;
    dst += n;
    len -= n;
  }
}

void apply_tail_group(uint64_t* w, size_t range_words, const std::vector<TailOp>& ops,
                      bool parallel, size_t zero_from_word = ~size_t{0}) {
  const long long nblocks = static_cast<long long>((range_words + 3) / 4);
  detail::par_for(parallel && nblocks >= (1LL << 13), nblocks, [&](long long blk) {
    uint64_t lw[4] = {0, 0, 0, 0};
    const size_t base = static_cast<size_t>(blk) * 4;
    if (base >= zero_from_word) return;  // whole block in the zero tail
    const unsigned have = range_words - base < 4 ? static_cast<unsigned>(range_words - base) : 4;
    for (unsigned k = 0; k < have; ++k) lw[k] = w[base + k];
    for (const TailOp& op : ops) {
      if (op.span <= 64) {
        lw[0] ^= ((lw[0] & op.mask1) >> op.shift) ^ ((lw[0] & op.mask2) >> (2 * op.shift));
        lw[1] ^= ((lw[1] & op.mask1) >> op.shift) ^ ((lw[1] & op.mask2) >> (2 * op.shift));
        lw[2] ^= ((lw[2] & op.mask1) >> op.shift) ^ ((lw[2] & op.mask2) >> (2 * op.shift));
        lw[3] ^= ((lw[3] & op.mask1) >> op.shift) ^ ((lw[3] & op.mask2) >> (2 * op.shift));
      } else {
        const uint64_t ov[4] = {lw[0], lw[1], lw[2], lw[3]};
        const unsigned S = op.span, D = op.shift, half = S / 2;
        for (unsigned inst = 0; inst + S <= 256; inst += S) {
          if (op.forward) {
            local_xor_range(lw, ov, inst + half - D, inst + half, half);
            local_xor_range(lw, ov, inst + half - D, inst + half + D, half - D);
          } else {
            local_xor_range(lw, ov, inst + half - D, inst + half, half);
          }
        }
      }
    }
    for (unsigned k = 0; k < have; ++k) w[base + k] = lw[k];
  });
}

constexpr size_t kFusedSpanBits = 256;

// The fused schedule of a 256-bit leaf (identical for every polynomial of
// 256 or more bits).
const std::vector<TailOp>& leaf256_ops(bool inverse) {
  static const std::vector<TailOp> fwd = [] {
    std::vector<Pass> sched;
    build_schedule(sched, kFusedSpanBits, 1);
    std::vector<TailOp> ops;
    for (const Pass& p : sched) emit_tail_ops(ops, p, kFusedSpanBits, false);
    return ops;
  }();
  static const std::vector<TailOp> inv = [] {
    std::vector<Pass> sched;
    build_schedule(sched, kFusedSpanBits, 1);
    std::vector<TailOp> ops;
    for (size_t i = sched.size(); i-- > 0;) emit_tail_ops(ops, sched[i], kFusedSpanBits, true);
    return ops;
  }();
  return inverse ? inv : fwd;
}

void convert_range(uint64_t* w, size_t nwords, size_t off_bits, size_t nbits, bool inverse,
                   bool parallel, size_t zero_from) {
  if (nbits <= 2 || off_bits >= zero_from) return;
  if (nbits <= kFusedSpanBits) {
    std::vector<Pass> sched;
    build_schedule(sched, nbits, 1);
    std::vector<TailOp> ops;
    if (!inverse) {
      for (const Pass& p : sched) emit_tail_ops(ops, p, nbits, false);
    } else {
      for (size_t i = sched.size(); i-- > 0;) emit_tail_ops(ops, sched[i], nbits, true);
    }
    apply_tail_group(w + off_bits / 64, (nbits + 63) / 64, ops, false);
    return;
  }

  const size_t tile = digit_size(nbits);  // >= 256 here
  std::vector<Pass> upper;                // expansion levels + digit-block transform
  for (size_t s = nbits; s >= 2 * tile; s /= 2)
    upper.push_back({s, s / 2 - s / (2 * tile)});
  build_schedule(upper, nbits / tile, tile);

  const long long ntiles = static_cast<long long>(nbits / tile);
  const bool par_tiles = parallel && ntiles >= 2 && nbits >= (size_t{1} << 16);
  auto run_tiles = [&] {
    if (tile == kFusedSpanBits) {
      const size_t zero_word = zero_from <= off_bits
                                   ? 0
                                   : (zero_from - off_bits >= nbits
                                          ? ~size_t{0}
                                          : (zero_from - off_bits + 63) / 64);
      apply_tail_group(w + off_bits / 64, nbits / 64, leaf256_ops(inverse), parallel, zero_word);
      return;
    }
    detail::par_for(par_tiles, ntiles, [&](long long t) {
      convert_range(w, nwords, off_bits + static_cast<size_t>(t) * tile, tile, inverse,
                    parallel && !par_tiles, zero_from);
    });
  };

  if (!inverse) {
    for (const Pass& p : upper)
      apply_big_pass(w, nwords, off_bits, nbits, p, false, parallel, zero_from);
    run_tiles();
  } else {
    run_tiles();
    for (size_t i = upper.size(); i-- > 0;)
      apply_big_pass(w, nwords, off_bits, nbits, upper[i], true, parallel, zero_from);
  }
}

void check_length(const BitPoly& f) {
  const size_t n = f.bit_length();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("basis_cvt: length must be a power of two");
}

}  // namespace

void basis_cvt(BitPoly& f, ExecPolicy policy, size_t content_bits) {
  check_length(f);
  convert_range(f.word_data(), f.word_count(), 0, f.bit_length(), false,
                policy == ExecPolicy::kParallel, content_bits ? content_bits : 1);
}

void i_basis_cvt(BitPoly& g, ExecPolicy policy) {
  check_length(g);
  convert_range(g.word_data(), g.word_count(), 0, g.bit_length(), true,
                policy == ExecPolicy::kParallel, ~size_t{0});
}

namespace reference {
namespace {

// Per-bit folds in the chunked high-to-low order of the division cascade;
// the plain-reading form the word-level engine is checked against.
void convert_bits(BitPoly& a, size_t off, size_t count, size_t unit, bool inverse) {
  if (count <= 2) return;
  const size_t t = digit_size(count);
  auto level = [&](size_t s, bool inv) {
    const size_t D = (s / 2 - s / (2 * t)) * unit;
    for (size_t sub = 0; sub < count / s; ++sub) {
      const size_t lo = off + sub * s * unit, mid = lo + s * unit / 2, top = lo + s * unit;
      if (!inv) {
        for (size_t p = top; p-- > mid;)
          if (a.bit(p)) a.flip_bit(p - D);
      } else {
        for (size_t p = mid; p < top; ++p)
          if (a.bit(p)) a.flip_bit(p - D);
      }
    }
  };
  if (!inverse) {
    for (size_t s = count; s >= 2 * t; s /= 2) level(s, false);
    convert_bits(a, off, count / t, unit * t, false);
    for (size_t g = 0; g < count / t; ++g) convert_bits(a, off + g * t * unit, t, unit, false);
  } else {
    for (size_t g = 0; g < count / t; ++g) convert_bits(a, off + g * t * unit, t, unit, true);
    convert_bits(a, off, count / t, unit * t, true);
    for (size_t s = 2 * t; s <= count; s *= 2) level(s, true);
  }
}

}  // namespace

void basis_cvt(BitPoly& f) {
  check_length(f);
  convert_bits(f, 0, f.bit_length(), 1, false);
}

void i_basis_cvt(BitPoly& g) {
  check_length(g);
  convert_bits(g, 0, g.bit_length(), 1, true);
}

}  // namespace reference
}  // namespace fpmul
