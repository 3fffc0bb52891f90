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

#include "qcube/bh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcube/dense.hpp"
#include "qcube/kernels.hpp"

namespace qcube {

double bh_default_bound(std::size_t d) {
  if (d == 0) throw std::invalid_argument("bh_default_bound: d must be >= 1");
  return std::ldexp(1.0, static_cast<int>(d));
}

namespace {

void check_degree(std::size_t degree, std::size_t d, const char* what) {
  if (d == 0) throw std::invalid_argument(std::string(what) + ": d must be >= 1");
  if (degree > d) {
    throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(degree) +
                                " exceeds d = " + std::to_string(d));
  }
}

double coefficient_lhs(double sum_pow, std::size_t d) {
  if (sum_pow == 0.0) return 0.0;
  const double e = 2.0 * static_cast<double>(d) / (static_cast<double>(d) + 1.0);
  return std::pow(sum_pow, 1.0 / e);
}

double power_term(double magnitude, std::size_t d) {
  const double e = 2.0 * static_cast<double>(d) / (static_cast<double>(d) + 1.0);
  return std::pow(magnitude, e);
}

}  // namespace

double bh_lhs_quantum(const PauliPolynomial& p, std::size_t d) {
  check_degree(p.degree(), d, "bh_lhs_quantum");
  double sum = 0.0;
  for (const auto& [s, c] : p.terms()) sum += power_term(std::abs(c), d);
  return coefficient_lhs(sum, d);
}

double bh_lhs_boolean(const BooleanPolynomial& f, std::size_t d) {
  check_degree(f.degree(), d, "bh_lhs_boolean");
  double sum = 0.0;
  for (const auto& [s, c] : f.terms()) sum += power_term(std::abs(c), d);
  return coefficient_lhs(sum, d);
}

SupNormResult sup_norm_boolean(const BooleanPolynomial& f, const SupNormOptions& opts) {
  const std::size_t m = f.m();
  if (f.is_zero()) return {0.0, true};
  const auto& kern = kernels::active_kernels();
  if (m <= opts.exhaustive_limit) {
    const std::size_t size = std::size_t{1} << m;
    const bool complex_valued = !f.is_real();
    std::vector<double> re(size, 0.0);
    std::vector<double> im;
    if (complex_valued) im.assign(size, 0.0);
    for (const auto& [s, c] : f.terms()) {
      const std::uint64_t idx = s.mask64();
      re[idx] = c.real();
      if (complex_valued) im[idx] = c.imag();
    }
    kern.fwht(re.data(), static_cast<unsigned>(m));
    if (complex_valued) kern.fwht(im.data(), static_cast<unsigned>(m));
    const double best =
        kern.max_sq_modulus(re.data(), complex_valued ? im.data() : nullptr, size);
    return {std::sqrt(best), true};
  }

  Rng rng(opts.seed, 0);
  SignVector best_x(m);
  double best = std::abs(f.evaluate(best_x));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const SignVector x = SignVector::random(m, rng);
    const double v = std::abs(f.evaluate(x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  // Greedy single-flip ascent from the best probe; each round is O(m) evals.
  bool improved = true;
  std::size_t rounds = 0;
  while (improved && rounds < 64) {
    improved = false;
    ++rounds;
    for (std::size_t j = 0; j < m; ++j) {
      best_x.flip(j);
      const double v = std::abs(f.evaluate(best_x));
      if (v > best) {
        best = v;
        improved = true;
      } else {
        best_x.flip(j);
      }
    }
  }
  return {best, false};
}

namespace {

BhReport make_report(std::size_t d, double lhs, double norm, bool lower_bound) {
  BhReport r;
  r.d = d;
  r.lhs = lhs;
  r.norm = norm;
  r.norm_is_lower_bound = lower_bound;
  if (norm > 0.0) {
    r.ratio = lhs / norm;
  } else {
    r.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace

BhReport bh_ratio_quantum(const PauliPolynomial& p, std::size_t d) {
  const double lhs = bh_lhs_quantum(p, d);
  return make_report(d, lhs, operator_norm(p), false);
}

BhReport bh_ratio_boolean(const BooleanPolynomial& f, std::size_t d, const SupNormOptions& opts) {
  const double lhs = bh_lhs_boolean(f, d);
  const SupNormResult sup = sup_norm_boolean(f, opts);
  return make_report(d, lhs, sup.value, !sup.exhaustive);
}

PauliPolynomial multilinear_observable(const std::vector<MultilinearEntry>& entries,
                                       std::size_t d, std::size_t n) {
  if (d == 0 || n == 0) {
    throw std::invalid_argument("multilinear_observable: d and n must be positive");
  }
  PauliPolynomial p(d * n);
  for (const auto& entry : entries) {
    if (entry.axes.size() != d || entry.sites.size() != d) {
      throw std::invalid_argument("multilinear_observable: entry does not list d axes and sites");
    }
    PauliIndex word(d * n);
    for (std::size_t j = 0; j < d; ++j) {
      if (entry.axes[j] < 1 || entry.axes[j] > 3) {
        throw std::invalid_argument("multilinear_observable: axis must be 1..3");
      }
      if (entry.sites[j] >= n) {
        throw std::invalid_argument("multilinear_observable: site exceeds n");
      }
      word.set_symbol(j * n + entry.sites[j], entry.axes[j]);
    }
    p.add_term(word, entry.value);
  }
  return p;
}

BhReport multilinear_ratio(const std::vector<MultilinearEntry>& entries, std::size_t d,
                           std::size_t n) {
  return bh_ratio_quantum(multilinear_observable(entries, d, n), d);
}

namespace {

void enumerate_rec(PauliIndex& word, std::size_t site, std::size_t budget, bool homogeneous,
                   std::vector<PauliIndex>& out) {
  const std::size_t n = word.n();
  if (site == n) {
    if (!homogeneous || budget == 0) out.push_back(word);
    return;
  }
  // Identity is always allowed unless the remaining sites cannot spend the
  // whole homogeneous budget.
  if (!homogeneous || budget < n - site) {
    enumerate_rec(word, site + 1, budget, homogeneous, out);
  }
  if (budget > 0) {
    for (unsigned sym = 1; sym <= 3; ++sym) {
      word.set_symbol(site, sym);
      enumerate_rec(word, site + 1, budget - 1, homogeneous, out);
    }
    word.set_symbol(site, 0);
  }
}

double family_size(std::size_t n, std::size_t max_weight, bool homogeneous) {
  double total = 0.0;
  double binom = 1.0;
  double pow3 = 1.0;
  for (std::size_t l = 0; l <= max_weight && l <= n; ++l) {
    if (l > 0) {
      binom *= static_cast<double>(n - l + 1) / static_cast<double>(l);
      pow3 *= 3.0;
    }
    if (!homogeneous || l == max_weight) total += binom * pow3;
  }
  return total;
}

}  // namespace

std::vector<PauliIndex> enumerate_words(std::size_t n, std::size_t max_weight, bool homogeneous) {
  if (n == 0) throw std::invalid_argument("enumerate_words: n must be positive");
  if (homogeneous && max_weight > n) {
    throw std::invalid_argument("enumerate_words: homogeneous weight exceeds n");
  }
  if (family_size(n, max_weight, homogeneous) > 1e7) {
    throw std::invalid_argument("enumerate_words: family exceeds ten million words");
  }
  std::vector<PauliIndex> out;
  PauliIndex word(n);
  enumerate_rec(word, 0, std::min(max_weight, n), homogeneous, out);
  return out;
}

PauliPolynomial random_observable(std::size_t n, std::size_t d, bool homogeneous, CoeffDist dist,
                                  Rng& rng) {
  PauliPolynomial p(n);
  for (const PauliIndex& word : enumerate_words(n, d, homogeneous)) {
    const double c = dist == CoeffDist::PlusMinusOne ? static_cast<double>(rng.sign())
                                                     : rng.gaussian();
    p.set_coefficient(word, cplx{c, 0.0});
  }
  return p;
}

}  // namespace qcube
