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
 * The low-degree coefficient inequality and its numerical verification.
 *
 * For a degree-d polynomial the l_{2d/(d+1)} norm of its coefficient
 * vector is bounded by a dimension-free constant times the sup norm (cube
 * side) or operator norm (qubit side). The routines here compute the
 * coefficient side (the "lhs"), the matching norm, and their ratio, for
 * random ensembles and for hand-built witnesses. The qubit-side constant
 * is tracked as 3^d times a cube-side bound supplied per call; the
 * default cube-side bound is 2^d.
 */

#include <cstdint>
#include <vector>

#include "qcube/boolean.hpp"
#include "qcube/pauli.hpp"
#include "qcube/rng.hpp"

namespace qcube {

/// Default cube-side coefficient bound for degree d: 2^d.
double bh_default_bound(std::size_t d);

/// (sum_s | A_s|^{2d/(d+1)})^{(d+1)/(2d)}; requires degree(p) <= d, d >= 1.
double bh_lhs_quantum(const PauliPolynomial& p, std::size_t d);

/// Cube analogue over Fourier coefficients; requires degree(f) <= d, d >= 1.
double bh_lhs_boolean(const BooleanPolynomial& f, std::size_t d);

struct SupNormOptions {
  /// Largest m for which all 2^m points are enumerated via the transform.
  std::size_t exhaustive_limit = 24;
  /// Random probes used beyond the exhaustive limit.
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

struct SupNormResult {
  double value = 0.0;
  /// False when the value is only a sampled lower bound.
  bool exhaustive = true;
};

/**
 * Sup of |f| over {-1,+1}^m. Exhaustive (Walsh transform of the full value
 * table) up to opts.exhaustive_limit coordinates; beyond that, seeded
 * random probing with single-flip ascent, reported as a lower bound.
 */
SupNormResult sup_norm_boolean(const BooleanPolynomial& f, const SupNormOptions& opts = {});

struct BhReport {
  std::size_t d = 0;
  double lhs = 0.0;
  double norm = 0.0;
  /// lhs / norm; 0 when both vanish, +infinity when only norm does.
  double ratio = 0.0;
  /// True when norm is a sampled lower bound (ratio then overestimates).
  bool norm_is_lower_bound = false;
};

BhReport bh_ratio_quantum(const PauliPolynomial& p, std::size_t d);
BhReport bh_ratio_boolean(const BooleanPolynomial& f, std::size_t d,
                          const SupNormOptions& opts = {});

/**
 * One coefficient of a d-linear form in Pauli symbols: block j of n qubits
 * (j = 0..d-1) receives sigma_{axes[j]} at qubit sites[j]. axes[j] in 1..3,
 * sites[j] in [0, n).
 */
struct MultilinearEntry {
  std::vector<unsigned> axes;
  std::vector<std::uint32_t> sites;
  cplx value;
};

/// Assembles the d-linear entries into one observable on d*n qubits.
PauliPolynomial multilinear_observable(const std::vector<MultilinearEntry>& entries,
                                       std::size_t d, std::size_t n);

/// bh_ratio_quantum of the assembled observable (d*n qubits must be dense-able).
BhReport multilinear_ratio(const std::vector<MultilinearEntry>& entries, std::size_t d,
                           std::size_t n);

/**
 * All words on n sites with weight <= max_weight (weight == max_weight
 * when homogeneous), in word-lexicographic order. Throws when the family
 * would exceed ten million words.
 */
std::vector<PauliIndex> enumerate_words(std::size_t n, std::size_t max_weight, bool homogeneous);

enum class CoeffDist { PlusMinusOne, Gaussian };

/**
 * Random Hermitian observable: one real coefficient per word of the
 * degree-d family (homogeneous or not), drawn iid from `dist`.
 */
PauliPolynomial random_observable(std::size_t n, std::size_t d, bool homogeneous, CoeffDist dist,
                                  Rng& rng);

}  // namespace qcube
