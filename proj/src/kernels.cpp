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

#include "qcube/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace qcube::kernels {

namespace {

void fwht_scalar(double* data, unsigned log2n) {
  const std::size_t n = std::size_t{1} << log2n;
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * len) {
      for (std::size_t j = block; j < block + len; ++j) {
        const double a = data[j];
        const double b = data[j + len];
        data[j] = a + b;
        data[j + len] = a - b;
      }
    }
  }
}

double max_sq_modulus_scalar(const double* re, const double* im, std::size_t count) {
  double best = 0.0;
  if (im == nullptr) {
    for (std::size_t i = 0; i < count; ++i) {
      const double v = re[i] * re[i];
      if (v > best) best = v;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const double v = re[i] * re[i] + im[i] * im[i];
      if (v > best) best = v;
    }
  }
  return best;
}

void parity_signed_sum_scalar(const std::uint64_t* masks, const double* re, const double* im,
                              std::size_t count, std::uint64_t select, double* out_re,
                              double* out_im) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const bool negative = std::popcount(masks[i] & select) & 1u;
    acc_re += negative ? -re[i] : re[i];
    if (im != nullptr) acc_im += negative ? -im[i] : im[i];
  }
  *out_re = acc_re;
  if (out_im != nullptr) *out_im = acc_im;
}

}  // namespace

const Funcs& scalar_kernels() {
  static const Funcs funcs{fwht_scalar, max_sq_modulus_scalar, parity_signed_sum_scalar,
                           "scalar"};
  return funcs;
}

#if defined(QCUBE_HAVE_AVX2_TU)
namespace detail {
const Funcs& avx2_funcs();
}
#endif

const Funcs* avx2_kernels() {
#if defined(QCUBE_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &detail::avx2_funcs();
  }
#endif
  return nullptr;
}

const Funcs& select_kernels(std::string_view name) {
  if (name == "scalar") return scalar_kernels();
  if (name == "avx2") {
    if (const Funcs* f = avx2_kernels()) return *f;
    throw std::runtime_error("select_kernels: avx2 kernels unavailable on this host");
  }
  if (name == "auto") {
    if (const Funcs* f = avx2_kernels()) return *f;
    return scalar_kernels();
  }
  throw std::invalid_argument("select_kernels: unknown kernel set '" + std::string(name) + "'");
}

const Funcs& active_kernels() {
  static const Funcs& chosen = []() -> const Funcs& {
    const char* env = std::getenv("QCUBE_KERNELS");
    return select_kernels(env != nullptr ? env : "auto");
  }();
  return chosen;
}

}  // namespace qcube::kernels
