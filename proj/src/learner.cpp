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

#include "qcube/learner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcube/bh.hpp"
#include "qcube/kernels.hpp"
#include "qcube/lift.hpp"

namespace qcube {

namespace {

constexpr std::uint64_t kMaxSamples = 100000000;  // 10^8

double checked_count(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " overflows a double");
  }
  return x;
}

}  // namespace

void validate(const LearnerConfig& cfg) {
  if (cfg.n == 0) {
    throw std::invalid_argument("n must be at least 1");
  }
  if (cfg.d == 0 || cfg.d > cfg.n) {
    throw std::invalid_argument("d must satisfy 1 <= d <= n");
  }
  if (!(cfg.eps > 0.0) || !(cfg.eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  if (!(cfg.delta > 0.0) || !(cfg.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (!(cfg.bh_bound >= 1.0)) {
    throw std::invalid_argument("bh_bound must be at least 1");
  }
  if (cfg.n_override && *cfg.n_override == 0) {
    throw std::invalid_argument("n_override must be positive");
  }
  if (cfg.b_override && !(*cfg.b_override > 0.0)) {
    throw std::invalid_argument("b_override must be positive");
  }
}

std::vector<IndexSet> candidate_sets(std::size_t n, std::size_t d) {
  std::vector<IndexSet> sets;
  for (const PauliIndex& word : enumerate_words(n, d, false)) {
    sets.push_back(index_q(word));
  }
  return sets;
}

double threshold_b(const LearnerConfig& cfg) {
  validate(cfg);
  const double numer = std::pow(cfg.eps / 10.0, (static_cast<double>(cfg.d) + 1.0) / 2.0);
  const double base = static_cast<double>(pow3(cfg.d + 1)) * cfg.bh_bound;
  const double denom = std::pow(base, static_cast<double>(cfg.d));
  const double b = numer / denom;
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("planned threshold underflows; use b_override");
  }
  return b;
}

std::uint64_t sample_count(const LearnerConfig& cfg, double b) {
  validate(cfg);
  if (!(b > 0.0)) {
    throw std::invalid_argument("threshold must be positive");
  }
  double family = 0.0;
  double binom = 1.0;  // C(n, 0)
  for (std::size_t l = 0; l <= cfg.d; ++l) {
    if (l > 0) {
      binom = binom * static_cast<double>(cfg.n - l + 1) / static_cast<double>(l);
    }
    family += binom;
  }
  checked_count(family, "candidate family size");
  const double log_arg =
      2.0 * static_cast<double>(pow3(cfg.d)) * family / cfg.delta;
  const double raw = std::ceil(2.0 / (b * b) * std::log(log_arg));
  checked_count(raw, "sample budget");
  if (raw >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    throw std::invalid_argument("sample budget exceeds the 64-bit range");
  }
  return static_cast<std::uint64_t>(raw);
}

std::uint64_t planned_sample_count(const LearnerConfig& cfg) {
  return sample_count(cfg, cfg.b_override.value_or(threshold_b(cfg)));
}

double survivor_cap(const LearnerConfig& cfg, double b) {
  validate(cfg);
  if (!(b > 0.0)) {
    throw std::invalid_argument("threshold must be positive");
  }
  const double expo = 2.0 * static_cast<double>(cfg.d) / (static_cast<double>(cfg.d) + 1.0);
  return std::pow(cfg.bh_bound / b, expo);
}

double error_chain_cap(const LearnerConfig& cfg, double b) {
  validate(cfg);
  if (!(b > 0.0)) {
    throw std::invalid_argument("threshold must be positive");
  }
  const double d = static_cast<double>(cfg.d);
  const double base = static_cast<double>(pow3(cfg.d + 1)) * cfg.bh_bound;
  return 10.0 * std::pow(base, 2.0 * d / (d + 1.0)) * std::pow(b, 2.0 / (d + 1.0));
}

ExpectationOracle::ExpectationOracle(PauliPolynomial a, double noise_std, std::uint64_t seed)
    : a_(std::move(a)), noise_std_(noise_std), noise_(seed, 1) {
  if (noise_std < 0.0) {
    throw std::invalid_argument("noise_std must be nonnegative");
  }
}

cplx ExpectationOracle::operator()(const SignVector& eps) {
  cplx value = expectation(a_, eps);
  if (noise_std_ > 0.0) {
    value += noise_std_ * noise_.gaussian();
  }
  return value;
}

std::vector<cplx> empirical_coefficients(const std::vector<Sample>& samples,
                                         const std::vector<IndexSet>& sets) {
  std::vector<cplx> alpha(sets.size(), cplx{0.0, 0.0});
  if (samples.empty()) {
    return alpha;
  }
  const std::size_t m = samples.front().x.m();
  for (const Sample& s : samples) {
    if (s.x.m() != m) {
      throw std::invalid_argument("samples mix sign vectors of different lengths");
    }
  }
  const double inv_n = 1.0 / static_cast<double>(samples.size());
  if (m <= 64) {
    // Kernel fast path: chi_S(x) = parity of the masked sign bits.
    std::vector<std::uint64_t> masks(samples.size());
    std::vector<double> re(samples.size());
    bool all_real = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      masks[i] = samples[i].x.mask64();
      re[i] = samples[i].value.real();
      if (samples[i].value.imag() != 0.0) {
        all_real = false;
      }
    }
    std::vector<double> im;
    if (!all_real) {
      im.resize(samples.size());
      for (std::size_t i = 0; i < samples.size(); ++i) {
        im[i] = samples[i].value.imag();
      }
    }
    const kernels::Funcs& k = kernels::active_kernels();
    for (std::size_t j = 0; j < sets.size(); ++j) {
      double sum_re = 0.0;
      double sum_im = 0.0;
      k.parity_signed_sum(masks.data(), re.data(), all_real ? nullptr : im.data(),
                          samples.size(), sets[j].mask64(), &sum_re,
                          all_real ? nullptr : &sum_im);
      alpha[j] = cplx{sum_re * inv_n, sum_im * inv_n};
    }
    return alpha;
  }
  for (const Sample& s : samples) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      alpha[j] += s.value * static_cast<double>(chi(sets[j], s.x));
    }
  }
  for (cplx& a : alpha) {
    a *= inv_n;
  }
  return alpha;
}

namespace {

LearnerReport finalize_report(std::vector<IndexSet> candidates, std::vector<cplx> alpha,
                              std::uint64_t samples_used, const LearnerConfig& cfg) {
  LearnerReport report;
  report.samples_used = samples_used;
  report.threshold = cfg.b_override.value_or(threshold_b(cfg));
  report.candidates = std::move(candidates);
  report.alpha = std::move(alpha);
  report.reconstructed = PauliPolynomial(cfg.n);
  for (std::size_t j = 0; j < report.candidates.size(); ++j) {
    if (std::abs(report.alpha[j]) >= 2.0 * report.threshold) {
      report.survivors.push_back(j);
      const std::optional<PauliIndex> word = index_p(report.candidates[j], cfg.n);
      // Candidates come from index_q, so the inverse always exists.
      const double scale = static_cast<double>(pow3(report.candidates[j].size()));
      report.reconstructed.add_term(*word, scale * report.alpha[j]);
    }
  }
  report.survivor_bound = survivor_cap(cfg, report.threshold);
  report.survivor_within_bound =
      static_cast<double>(report.survivors.size()) <= report.survivor_bound;
  return report;
}

}  // namespace

LearnerReport learn_from_samples(const std::vector<Sample>& samples, const LearnerConfig& cfg) {
  validate(cfg);
  if (samples.empty()) {
    throw std::invalid_argument("at least one sample is required");
  }
  const std::size_t m = 3 * cfg.n;
  for (const Sample& s : samples) {
    if (s.x.m() != m) {
      throw std::invalid_argument("sample sign vectors must have length 3n");
    }
  }
  std::vector<IndexSet> candidates = candidate_sets(cfg.n, cfg.d);
  std::vector<cplx> alpha = empirical_coefficients(samples, candidates);
  return finalize_report(std::move(candidates), std::move(alpha), samples.size(), cfg);
}

LearnerReport learn(const QueryFn& oracle, const LearnerConfig& cfg, std::uint64_t seed) {
  validate(cfg);
  std::uint64_t n_samples = 0;
  if (cfg.n_override) {
    n_samples = *cfg.n_override;
  } else {
    n_samples = planned_sample_count(cfg);
    if (n_samples > kMaxSamples) {
      throw std::invalid_argument(
          "planned sample budget " + std::to_string(n_samples) + " exceeds the 10^8 run limit; "
          "set n_override to force a budget");
    }
  }
  const std::size_t m = 3 * cfg.n;
  std::vector<IndexSet> candidates = candidate_sets(cfg.n, cfg.d);
  std::vector<cplx> sums(candidates.size(), cplx{0.0, 0.0});
  Rng rng(seed, 0);
  // Stream in fixed chunks so the budget never dictates memory use.
  constexpr std::size_t kChunk = 1u << 16;
  if (m <= 64) {
    std::vector<std::uint64_t> masks(kChunk);
    std::vector<double> re(kChunk);
    std::vector<double> im(kChunk);
    const kernels::Funcs& k = kernels::active_kernels();
    std::uint64_t done = 0;
    while (done < n_samples) {
      const std::size_t batch =
          static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, n_samples - done));
      bool all_real = true;
      for (std::size_t i = 0; i < batch; ++i) {
        SignVector x = SignVector::random(m, rng);
        const cplx value = oracle(x);
        masks[i] = x.mask64();
        re[i] = value.real();
        im[i] = value.imag();
        if (value.imag() != 0.0) {
          all_real = false;
        }
      }
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        double sum_re = 0.0;
        double sum_im = 0.0;
        k.parity_signed_sum(masks.data(), re.data(), all_real ? nullptr : im.data(), batch,
                            candidates[j].mask64(), &sum_re, all_real ? nullptr : &sum_im);
        sums[j] += cplx{sum_re, sum_im};
      }
      done += batch;
    }
  } else {
    for (std::uint64_t i = 0; i < n_samples; ++i) {
      SignVector x = SignVector::random(m, rng);
      const cplx value = oracle(x);
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        sums[j] += value * static_cast<double>(chi(candidates[j], x));
      }
    }
  }
  std::vector<cplx> alpha(sums.size());
  const double inv_n = 1.0 / static_cast<double>(n_samples);
  for (std::size_t j = 0; j < sums.size(); ++j) {
    alpha[j] = sums[j] * inv_n;
  }
  return finalize_report(std::move(candidates), std::move(alpha), n_samples, cfg);
}

bool good_event(const PauliPolynomial& truth, const LearnerReport& report) {
  BooleanPolynomial f = lift(truth);
  for (std::size_t j = 0; j < report.candidates.size(); ++j) {
    const cplx target = f.coefficient(report.candidates[j]);
    if (std::abs(report.alpha[j] - target) > report.threshold) {
      return false;
    }
  }
  return true;
}

}  // namespace qcube
