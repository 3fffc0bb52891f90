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
 * Reproducible random number generation.
 *
 * Every randomized routine in this project draws from Rng, a thin wrapper
 * around std::mt19937_64 whose raw output sequence is fixed by the C++
 * standard. Floating-point variates are derived from raw 64-bit draws with
 * explicit arithmetic (never through std::uniform_real_distribution or
 * std::normal_distribution, whose output is implementation-defined), so a
 * given (seed, stream) pair produces bit-identical values on every platform.
 *
 * Streams: independent substreams are derived from a root seed with
 * SplitMix64, so callers can split one user-facing seed into decoupled
 * sources (e.g. sample points vs. oracle noise) without overlap.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qcube {

/// One SplitMix64 step: advances `state` and returns the next output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives the seed for substream `stream` of root seed `seed`.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (stream * 0xD1342543DE82EF95ULL);
  std::uint64_t s = splitmix64_next(state);
  return splitmix64_next(state) ^ s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : gen_(derive_stream_seed(seed, stream)) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Fair sign in {+1, -1}.
  int sign() { return (next_u64() >> 63) ? -1 : 1; }

  /// Standard normal via Box-Muller; consumes draws in pairs.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    // uniform01() can return 0; shift to (0, 1] for the log.
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace qcube
