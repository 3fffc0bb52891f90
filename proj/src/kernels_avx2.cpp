// Copyright 2026 The qcube Authors
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

// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the runtime dispatch in
// kernels.cpp, which checks CPU support first.

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "qcube/kernels.hpp"

namespace qcube::kernels::detail {

namespace {

// One butterfly layer with partner distance 1, on four lanes at a time:
// [a0,b0,a1,b1] -> [a0+b0, a0-b0, a1+b1, a1-b1].
inline __m256d butterfly1(__m256d v) {
  const __m256d even = _mm256_movedup_pd(v);
  const __m256d odd = _mm256_permute_pd(v, 0xF);
  return _mm256_permute_pd(_mm256_addsub_pd(even, odd), 0x5);
}

// Partner distance 2: [a0,a1,b0,b1] -> [a0+b0, a1+b1, a0-b0, a1-b1].
inline __m256d butterfly2(__m256d v) {
  const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
  const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
  return _mm256_blend_pd(_mm256_add_pd(lo, hi), _mm256_sub_pd(lo, hi), 0xC);
}

void fwht_avx2(double* data, unsigned log2n) {
  const std::size_t n = std::size_t{1} << log2n;
  if (n < 4) {
    // Lengths 1 and 2 cannot fill a vector; the scalar path is exact anyway.
    scalar_kernels().fwht(data, log2n);
    return;
  }
  for (std::size_t i = 0; i < n; i += 4) {
    __m256d v = _mm256_loadu_pd(data + i);
    _mm256_storeu_pd(data + i, butterfly2(butterfly1(v)));
  }
  for (std::size_t len = 4; len < n; len <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * len) {
      for (std::size_t j = block; j < block + len; j += 4) {
        const __m256d a = _mm256_loadu_pd(data + j);
        const __m256d b = _mm256_loadu_pd(data + j + len);
        _mm256_storeu_pd(data + j, _mm256_add_pd(a, b));
        _mm256_storeu_pd(data + j + len, _mm256_sub_pd(a, b));
      }
    }
  }
}

double max_sq_modulus_avx2(const double* re, const double* im, std::size_t count) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  if (im == nullptr) {
    for (; i + 4 <= count; i += 4) {
      const __m256d r = _mm256_loadu_pd(re + i);
      best = _mm256_max_pd(best, _mm256_mul_pd(r, r));
    }
  } else {
    for (; i + 4 <= count; i += 4) {
      const __m256d r = _mm256_loadu_pd(re + i);
      const __m256d g = _mm256_loadu_pd(im + i);
      best = _mm256_max_pd(best, _mm256_fmadd_pd(r, r, _mm256_mul_pd(g, g)));
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int k = 1; k < 4; ++k) {
    if (lanes[k] > out) out = lanes[k];
  }
  for (; i < count; ++i) {
    const double v = im == nullptr ? re[i] * re[i] : re[i] * re[i] + im[i] * im[i];
    if (v > out) out = v;
  }
  return out;
}

// Bit parity of masks[i] & select per 64-bit lane, as a sign bit in bit 63.
inline __m256i parity_sign_bits(__m256i masked) {
  const __m256i nibble_counts =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                       2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0F);
  const __m256i lo = _mm256_and_si256(masked, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(masked, 4), low_nibbles);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(nibble_counts, lo),
                                         _mm256_shuffle_epi8(nibble_counts, hi));
  const __m256i per_lane = _mm256_sad_epu8(counts, _mm256_setzero_si256());
  return _mm256_slli_epi64(per_lane, 63);
}

void parity_signed_sum_avx2(const std::uint64_t* masks, const double* re, const double* im,
                            std::size_t count, std::uint64_t select, double* out_re,
                            double* out_im) {
  const __m256i sel = _mm256_set1_epi64x(static_cast<long long>(select));
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i masked =
        _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i)), sel);
    const __m256d signs = _mm256_castsi256_pd(parity_sign_bits(masked));
    acc_re = _mm256_add_pd(acc_re, _mm256_xor_pd(_mm256_loadu_pd(re + i), signs));
    if (im != nullptr) {
      acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(_mm256_loadu_pd(im + i), signs));
    }
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc_re);
  double sum_re = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  double sum_im = 0.0;
  if (im != nullptr) {
    _mm256_store_pd(lanes, acc_im);
    sum_im = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  }
  for (; i < count; ++i) {
    const bool negative = std::popcount(masks[i] & select) & 1u;
    sum_re += negative ? -re[i] : re[i];
    if (im != nullptr) sum_im += negative ? -im[i] : im[i];
  }
  *out_re = sum_re;
  if (out_im != nullptr) *out_im = im != nullptr ? sum_im : 0.0;
}

}  // namespace

const Funcs& avx2_funcs() {
  static const Funcs funcs{fwht_avx2, max_sq_modulus_avx2, parity_signed_sum_avx2, "avx2"};
  return funcs;
}

}  // namespace qcube::kernels::detail
