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

#pragma once

/**
 * Data-parallel inner loops with scalar reference implementations and an
 * AVX2 variant selected at runtime.
 *
 * The three kernels cover the hot paths of this project: the in-place
 * Walsh-Hadamard transform behind exhaustive sup-norm evaluation, the
 * max-squared-modulus reduction over a value table, and the parity-signed
 * accumulation behind empirical Fourier coefficients.
 *
 * Equivalence contract, enforced by tests: fwht is bit-identical between
 * variants (same operations in the same per-element order); the two
 * reductions may differ by rounding only (the AVX2 variant uses fused
 * multiply-add and lane-wise accumulation), within 1e-12 relative.
 */

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qcube::kernels {

struct Funcs {
  /// In-place unnormalized Walsh-Hadamard transform of 2^log2n doubles.
  void (*fwht)(double* data, unsigned log2n);

  /// Max over i of re[i]^2 + im[i]^2 (im may be nullptr; count may be 0).
  double (*max_sq_modulus)(const double* re, const double* im, std::size_t count);

  /**
   * Accumulates sum_i (-1)^{popcount(masks[i] & select)} * v_i where
   * v_i = (re[i], im[i]). im and out_im may both be nullptr for real data.
   */
  void (*parity_signed_sum)(const std::uint64_t* masks, const double* re, const double* im,
                            std::size_t count, std::uint64_t select, double* out_re,
                            double* out_im);

  const char* name;
};

/// Portable reference implementations.
const Funcs& scalar_kernels();

/// AVX2 implementations, or nullptr when the build or CPU lacks them.
const Funcs* avx2_kernels();

/// Selection by name: "scalar", "avx2" (throws if unavailable), or "auto".
const Funcs& select_kernels(std::string_view name);

/**
 * The process-wide choice: "auto", or the value of QCUBE_KERNELS when that
 * environment variable is set. Evaluated once and cached.
 */
const Funcs& active_kernels();

}  // namespace qcube::kernels
