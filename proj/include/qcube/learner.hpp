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
 * Learning a low-degree observable from expectation queries.
 *
 * The observable A (degree <= d, n qubits) is recovered through its lifted
 * cube polynomial f_A on {-1,+1}^{3n}: sample N sign vectors uniformly,
 * query f_A at each, form empirical Fourier coefficients alpha_S over the
 * candidate family {q(s)}, keep the survivors |alpha_S| >= 2b (ties kept),
 * and rescale each survivor by 3^{|S|} back to a Pauli coefficient.
 *
 * The planned threshold b and sample budget N come from the concentration
 * analysis: given a target squared-l2 error eps, failure probability
 * delta, and a cube-side coefficient bound for degree d,
 *
 *   b = (eps/10)^{(d+1)/2} / (3^{d+1} bound)^d,
 *   N = ceil( (2/b^2) ln(2 3^d |candidates| / delta) ),
 *
 * and on the good event (every alpha within b of the truth) the number of
 * survivors stays within survivor_cap and the squared-l2 error within
 * error_chain_cap.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcube/boolean.hpp"
#include "qcube/pauli.hpp"
#include "qcube/rng.hpp"

namespace qcube {

struct LearnerConfig {
  std::size_t n = 1;
  std::size_t d = 1;
  /// Target squared-l2 coefficient error, in (0, 1).
  double eps = 0.1;
  /// Failure probability budget, in (0, 1).
  double delta = 0.1;
  /// Cube-side coefficient bound used by the threshold; >= 1.
  double bh_bound = 2.0;
  /// Manual sample budget, replacing the planned N.
  std::optional<std::uint64_t> n_override;
  /// Manual threshold, replacing the planned b.
  std::optional<double> b_override;
};

/// Throws std::invalid_argument when a field is out of range.
void validate(const LearnerConfig& cfg);

/**
 * The candidate support family {q(s) : weight(s) <= d} in word order; its
 * size is sum_{l<=d} 3^l C(n,l).
 */
std::vector<IndexSet> candidate_sets(std::size_t n, std::size_t d);

/// Planned threshold b for cfg (ignores b_override).
double threshold_b(const LearnerConfig& cfg);

/// Planned sample budget for threshold b.
std::uint64_t sample_count(const LearnerConfig& cfg, double b);

/// sample_count at the planned threshold: the budget a run would use.
std::uint64_t planned_sample_count(const LearnerConfig& cfg);

/// Survivor-count cap (bound/b)^{2d/(d+1)}, valid on the good event.
double survivor_cap(const LearnerConfig& cfg, double b);

/// Squared-l2 error cap 10 (3^{d+1} bound)^{2d/(d+1)} b^{2/(d+1)}.
double error_chain_cap(const LearnerConfig& cfg, double b);

struct Sample {
  SignVector x;
  cplx value;
};

/// A learner's view of the system: the value of f_A at a sign vector.
using QueryFn = std::function<cplx(const SignVector&)>;

/**
 * Query source backed by a stored observable: returns expectation(a, eps)
 * plus centered Gaussian noise of deviation noise_std on the real part.
 * Noise draws come from their own stream of `seed`, so runs are
 * reproducible and decoupled from the learner's sampling stream.
 */
class ExpectationOracle {
 public:
  ExpectationOracle(PauliPolynomial a, double noise_std, std::uint64_t seed);

  cplx operator()(const SignVector& eps);

 private:
  PauliPolynomial a_;
  double noise_std_;
  Rng noise_;
};

struct LearnerReport {
  std::uint64_t samples_used = 0;
  double threshold = 0.0;
  std::vector<IndexSet> candidates;
  /// Empirical coefficients, aligned with `candidates`.
  std::vector<cplx> alpha;
  /// Indices into `candidates` with |alpha| >= 2 * threshold.
  std::vector<std::size_t> survivors;
  PauliPolynomial reconstructed;
  double survivor_bound = 0.0;
  bool survivor_within_bound = false;
};

/// Empirical coefficients (1/N) sum_i value_i chi_S(x_i) for each set.
std::vector<cplx> empirical_coefficients(const std::vector<Sample>& samples,
                                         const std::vector<IndexSet>& sets);

/// The estimation pipeline on caller-provided samples.
LearnerReport learn_from_samples(const std::vector<Sample>& samples, const LearnerConfig& cfg);

/**
 * Draws the sample budget from stream 0 of `seed`, queries the oracle at
 * each point, and streams the estimation pipeline in fixed-size chunks,
 * so memory use is independent of the budget. Budgets beyond 10^8 are
 * refused; use planned_sample_count to inspect them and n_override to
 * force a budget.
 */
LearnerReport learn(const QueryFn& oracle, const LearnerConfig& cfg, std::uint64_t seed);

/// True when every candidate coefficient landed within the threshold.
bool good_event(const PauliPolynomial& truth, const LearnerReport& report);

}  // namespace qcube
