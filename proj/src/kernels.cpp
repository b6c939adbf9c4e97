// Copyright 2026 The rookcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#if defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>
#define RK_HAVE_AVX512_KERNEL 1
#endif

namespace rookcodes::kernels {
namespace {

constexpr std::uint64_t kP = PrimeField::kMersenne61;

#ifdef RK_HAVE_AVX512_KERNEL
// Eight lanes of a * b + r modulo 2^61-1, left in [0, p + 8). a must be
// reduced; b and r may be partially reduced (below p + 8). The product is
// split into 32-bit halves and the 2^64 and 2^32 terms folded using
// 2^61 = 1. a_hi8 is 8 * (a >> 32), which still fits in 32 bits, and b_hi
// is b with its dwords swapped (mul_epu32 reads only the low dword).
__attribute__((target("avx512f"), always_inline)) inline __m512i
fma_lanes_partial(__m512i a, __m512i a_hi, __m512i a_hi8, __m512i b,
                  __m512i b_hi, __m512i r) {
  const __m512i p = _mm512_set1_epi64(static_cast<long long>(kP));
  const __m512i low29 = _mm512_set1_epi64((1LL << 29) - 1);
  const __m512i lo = _mm512_mul_epu32(a, b);
  const __m512i hi8 = _mm512_mul_epu32(a_hi8, b_hi);
  const __m512i mid =
      _mm512_add_epi64(_mm512_mul_epu32(a, b_hi), _mm512_mul_epu32(a_hi, b));
  __m512i t = _mm512_add_epi64(_mm512_and_si512(lo, p), _mm512_srli_epi64(lo, 61));
  t = _mm512_add_epi64(t, hi8);
  t = _mm512_add_epi64(t, _mm512_srli_epi64(mid, 29));
  t = _mm512_add_epi64(t, _mm512_slli_epi64(_mm512_and_si512(mid, low29), 32));
  t = _mm512_add_epi64(t, r);
  return _mm512_add_epi64(_mm512_and_si512(t, p), _mm512_srli_epi64(t, 61));
}

// Fully reduced a * b + r for reduced inputs.
__attribute__((target("avx512f"), always_inline)) inline __m512i
fma_lanes(__m512i a, __m512i a_hi8, __m512i b, __m512i r) {
  const __m512i p = _mm512_set1_epi64(static_cast<long long>(kP));
  const __m512i t =
      fma_lanes_partial(a, _mm512_srli_epi64(a, 32), a_hi8, b,
                        _mm512_shuffle_epi32(b, _MM_PERM_CDAB), r);
  return _mm512_min_epu64(t, _mm512_sub_epi64(t, p));
}

__attribute__((target("avx512f"), always_inline)) inline __m512i
mul_lanes(__m512i a, __m512i b) {
  const __m512i a_hi8 = _mm512_slli_epi64(_mm512_srli_epi64(a, 32), 3);
  return fma_lanes(a, a_hi8, b, _mm512_setzero_si512());
}

__attribute__((target("avx512f"), always_inline)) inline __mmask8
tail_mask(std::size_t left) {
  return left >= 8 ? __mmask8{0xff} : static_cast<__mmask8>((1u << left) - 1);
}

struct Coeff {
  __m512i a, a_hi, a_hi8;
};

__attribute__((target("avx512f"), always_inline)) inline Coeff
broadcast_coeff(std::uint64_t c) {
  return {_mm512_set1_epi64(static_cast<long long>(c)),
          _mm512_set1_epi64(static_cast<long long>(c >> 32)),
          _mm512_set1_epi64(static_cast<long long>((c >> 32) << 3))};
}

// Two destination rows per pass so each source vector is loaded and split
// once.
__attribute__((target("avx512f"))) void axpy_rows_avx512(
    Fe* rows, std::size_t stride, std::size_t row_count,
    const std::uint64_t* coeffs, const Fe* src, std::size_t count,
    PendingInverse* background) {
  std::size_t i = 0;
  for (; i + 2 <= row_count; i += 2) {
    // A couple of dependent divisions per row pair hide under the vector
    // work instead of stalling the next pivot.
    if (background != nullptr && !background->done()) {
      background->step();
      if (!background->done()) background->step();
    }
    const Coeff c0 = broadcast_coeff(coeffs[i]);
    const Coeff c1 = broadcast_coeff(coeffs[i + 1]);
    Fe* d0 = rows + i * stride;
    Fe* d1 = d0 + stride;
    for (std::size_t j = 0; j < count; j += 8) {
      const __mmask8 lanes = tail_mask(count - j);
      const __m512i b = _mm512_maskz_loadu_epi64(lanes, src + j);
      const __m512i b_hi = _mm512_shuffle_epi32(b, _MM_PERM_CDAB);
      const __m512i r0 = _mm512_maskz_loadu_epi64(lanes, d0 + j);
      const __m512i r1 = _mm512_maskz_loadu_epi64(lanes, d1 + j);
      _mm512_mask_storeu_epi64(d0 + j, lanes,
                               fma_lanes_partial(c0.a, c0.a_hi, c0.a_hi8, b, b_hi, r0));
      _mm512_mask_storeu_epi64(d1 + j, lanes,
                               fma_lanes_partial(c1.a, c1.a_hi, c1.a_hi8, b, b_hi, r1));
    }
  }
  if (i < row_count) {
    const Coeff c = broadcast_coeff(coeffs[i]);
    Fe* d = rows + i * stride;
    for (std::size_t j = 0; j < count; j += 8) {
      const __mmask8 lanes = tail_mask(count - j);
      const __m512i b = _mm512_maskz_loadu_epi64(lanes, src + j);
      const __m512i b_hi = _mm512_shuffle_epi32(b, _MM_PERM_CDAB);
      const __m512i r = _mm512_maskz_loadu_epi64(lanes, d + j);
      _mm512_mask_storeu_epi64(d + j, lanes,
                               fma_lanes_partial(c.a, c.a_hi, c.a_hi8, b, b_hi, r));
    }
  }
}

// Lanes of a are brought below p before splitting; b may stay partial.
__attribute__((target("avx512f"))) std::uint64_t dot_avx512(const Fe* a_in,
                                                          const Fe* b_in,
                                                          std::size_t count) {
  const __m512i p = _mm512_set1_epi64(static_cast<long long>(kP));
  __m512i acc = _mm512_setzero_si512();
  for (std::size_t j = 0; j < count; j += 8) {
    const __mmask8 lanes = tail_mask(count - j);
    __m512i a = _mm512_maskz_loadu_epi64(lanes, a_in + j);
    a = _mm512_min_epu64(a, _mm512_sub_epi64(a, p));
    const __m512i a_hi = _mm512_srli_epi64(a, 32);
    const __m512i a_hi8 = _mm512_slli_epi64(a_hi, 3);
    const __m512i b = _mm512_maskz_loadu_epi64(lanes, b_in + j);
    const __m512i b_hi = _mm512_shuffle_epi32(b, _MM_PERM_CDAB);
    acc = fma_lanes_partial(a, a_hi, a_hi8, b, b_hi, acc);
  }
  alignas(64) std::uint64_t lane[8];
  _mm512_store_si512(lane, acc);
  u128 sum = 0;
  for (std::uint64_t v : lane) sum += v;
  return PrimeField::reduce_mersenne61(sum);
}

__attribute__((target("avx512f"))) void mul_pointwise_avx512(
    Fe* acc, const Fe* by, std::size_t count) {
  for (std::size_t j = 0; j < count; j += 8) {
    const __mmask8 lanes = tail_mask(count - j);
    const __m512i a = _mm512_maskz_loadu_epi64(lanes, acc + j);
    const __m512i b = _mm512_maskz_loadu_epi64(lanes, by + j);
    _mm512_mask_storeu_epi64(acc + j, lanes, mul_lanes(a, b));
  }
}

__attribute__((target("avx512f"))) void scale_avx512(Fe* xs, std::size_t count,
                                                   std::uint64_t s) {
  const __m512i b = _mm512_set1_epi64(static_cast<long long>(s));
  for (std::size_t j = 0; j < count; j += 8) {
    const __mmask8 lanes = tail_mask(count - j);
    const __m512i a = _mm512_maskz_loadu_epi64(lanes, xs + j);
    // xs may be partially reduced, so it goes in the second slot.
    _mm512_mask_storeu_epi64(xs + j, lanes, mul_lanes(b, a));
  }
}

__attribute__((target("avx512f"))) void pow_pointwise_avx512(
    Fe* out, const Fe* xs, std::size_t count, std::uint64_t e) {
  const int top = 62 - std::countl_zero(e);
  for (std::size_t j = 0; j < count; j += 8) {
    const __mmask8 lanes = tail_mask(count - j);
    const __m512i x = _mm512_maskz_loadu_epi64(lanes, xs + j);
    __m512i r = x;
    for (int bit = top; bit >= 0; --bit) {
      r = mul_lanes(r, r);
      if ((e >> bit) & 1) r = mul_lanes(r, x);
    }
    _mm512_mask_storeu_epi64(out + j, lanes, r);
  }
}

bool use_avx512() {
  static const bool has = __builtin_cpu_supports("avx512f");
  return has;
}
#endif

bool fast_path(const PrimeField& field) {
#ifdef RK_HAVE_AVX512_KERNEL
  return field.is_mersenne61() && use_avx512();
#else
  (void)field;
  return false;
#endif
}

}  // namespace

void add_scaled_rows(const PrimeField& field, Fe* rows, std::size_t stride,
                     std::size_t row_count, const Fe* coeffs, const Fe* src,
                     std::size_t count, PendingInverse* background) {
  if (row_count == 0 || count == 0) return;
  static_assert(sizeof(Fe) == sizeof(std::uint64_t));
#ifdef RK_HAVE_AVX512_KERNEL
  if (fast_path(field)) {
    axpy_rows_avx512(rows, stride, row_count,
                     reinterpret_cast<const std::uint64_t*>(coeffs), src, count,
                     background);
    return;
  }
#endif
  for (std::size_t i = 0; i < row_count; ++i) {
    Fe* dst = rows + i * stride;
    if (field.is_mersenne61()) {
      for (std::size_t j = 0; j < count; ++j) {
        dst[j].v = PrimeField::reduce_mersenne61(u128{coeffs[i].v} * src[j].v + dst[j].v);
      }
    } else {
      for (std::size_t j = 0; j < count; ++j) {
        dst[j] = field.add(dst[j], field.mul(coeffs[i], src[j]));
      }
    }
  }
}

Fe dot(const PrimeField& field, const Fe* a, const Fe* b, std::size_t count) {
#ifdef RK_HAVE_AVX512_KERNEL
  if (fast_path(field)) return Fe{dot_avx512(a, b, count)};
#endif
  if (field.is_mersenne61()) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < count; ++j) {
      acc = PrimeField::reduce_mersenne61(u128{a[j].v} * b[j].v + acc);
    }
    return Fe{acc};
  }
  Fe acc = field.zero();
  for (std::size_t j = 0; j < count; ++j) acc = field.add(acc, field.mul(a[j], b[j]));
  return acc;
}

void scale(const PrimeField& field, Fe* xs, std::size_t count, Fe s) {
#ifdef RK_HAVE_AVX512_KERNEL
  if (fast_path(field)) {
    scale_avx512(xs, count, s.v);
    return;
  }
#endif
  for (std::size_t j = 0; j < count; ++j) xs[j] = field.mul(xs[j], s);
}

void mul_pointwise(const PrimeField& field, Fe* acc, const Fe* by,
                   std::size_t count) {
#ifdef RK_HAVE_AVX512_KERNEL
  if (fast_path(field)) {
    mul_pointwise_avx512(acc, by, count);
    return;
  }
#endif
  for (std::size_t j = 0; j < count; ++j) acc[j] = field.mul(acc[j], by[j]);
}

void pow_pointwise(const PrimeField& field, Fe* out, const Fe* xs,
                   std::size_t count, std::uint64_t e, OpCounter& counter) {
  if (count == 0) return;
  if (e == 0) {
    std::fill(out, out + count, field.one());
    return;
  }
  const std::uint64_t per_element =
      static_cast<std::uint64_t>(std::bit_width(e) - 1 + std::popcount(e) - 1);
  counter.muls += per_element * count;
#ifdef RK_HAVE_AVX512_KERNEL
  if (fast_path(field)) {
    pow_pointwise_avx512(out, xs, count, e);
    return;
  }
#endif
  OpCounter scratch;
  for (std::size_t j = 0; j < count; ++j) out[j] = field.pow(xs[j], e, scratch);
}

}  // namespace rookcodes::kernels
