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

#include "qcube/bohr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qcube/dense.hpp"
#include "qcube/kernels.hpp"
#include "qcube/lift.hpp"
#include "qcube/rng.hpp"

namespace qcube {

namespace {

double eval_series(const std::vector<double>& a, double r) {
  double g = 0.0;
  for (std::size_t w = a.size(); w-- > 0;) {
    g = g * r + a[w];
  }
  return g;
}

double eval_derivative(const std::vector<double>& a, double r) {
  double g = 0.0;
  for (std::size_t w = a.size(); w-- > 1;) {
    g = g * r + a[w] * static_cast<double>(w);
  }
  return g;
}

/**
 * Root of the monotone series sum_w a_w r^w = t, reported as the largest
 * representable r whose left side still stays at or below t, so exact
 * algebraic roots (such as r = 1 when a_0 + a_1 = t) come back exact.
 */
RadiusResult solve_radius(const std::vector<double>& a, double t, bool exhaustive) {
  RadiusResult out;
  out.norm_used = t;
  out.norm_exhaustive = exhaustive;
  double heavy = 0.0;
  for (std::size_t w = 1; w < a.size(); ++w) {
    heavy += a[w];
  }
  if (heavy == 0.0) {
    out.is_infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const double a0 = a.empty() ? 0.0 : a[0];
  if (t <= a0) {
    out.value = 0.0;
    out.residual = std::abs(a0 - t);
    return out;
  }
  double hi = 1.0;
  for (int i = 0; i < 1100 && eval_series(a, hi) < t; ++i) {
    hi *= 2.0;
  }
  const double hi_cap = hi;
  double lo = hi > 1.0 ? hi * 0.5 : 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval_series(a, mid) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double r = hi;
  for (int i = 0; i < 3; ++i) {
    const double g = eval_series(a, r);
    const double dg = eval_derivative(a, r);
    if (!(dg > 0.0)) break;
    const double next = r - (g - t) / dg;
    if (!std::isfinite(next) || next < 0.0 || next > hi_cap) break;
    r = next;
  }
  // Settle on the largest r whose left side does not exceed the norm.
  for (int i = 0; i < 256 && eval_series(a, r) > t; ++i) {
    r = std::nextafter(r, 0.0);
  }
  for (int i = 0; i < 256; ++i) {
    const double up = std::nextafter(r, std::numeric_limits<double>::infinity());
    if (eval_series(a, up) <= t) {
      r = up;
    } else {
      break;
    }
  }
  out.value = r;
  out.residual = std::abs(eval_series(a, r) - t);
  return out;
}

}  // namespace

RadiusResult boolean_radius(const BooleanPolynomial& f, const SupNormOptions& opts) {
  if (f.term_count() == 0) {
    throw std::invalid_argument("boolean_radius: the zero polynomial has no radius");
  }
  const SupNormResult norm = sup_norm_boolean(f, opts);
  std::vector<double> by_weight(f.degree() + 1, 0.0);
  for (const auto& [s, c] : f.terms()) {
    by_weight[s.size()] += std::abs(c);
  }
  return solve_radius(by_weight, norm.value, norm.exhaustive);
}

RadiusResult quantum_radius(const PauliPolynomial& a) {
  if (a.terms().empty()) {
    throw std::invalid_argument("quantum_radius: the zero observable has no radius");
  }
  const double norm = operator_norm(a);
  std::vector<double> by_weight(a.degree() + 1, 0.0);
  for (const auto& [s, c] : a.terms()) {
    by_weight[s.weight()] += std::abs(c);
  }
  return solve_radius(by_weight, norm, true);
}

InequalityCheck radius_inequality_check(const PauliPolynomial& a, const SupNormOptions& opts) {
  InequalityCheck check;
  check.quantum_side = quantum_radius(a);
  check.boolean_side = boolean_radius(lift(a), opts);
  check.degenerate = check.quantum_side.is_infinite;
  if (check.degenerate) {
    check.passed = true;
  } else {
    check.passed = check.boolean_side.value <= 3.0 * check.quantum_side.value + 1e-9;
  }
  return check;
}

namespace {

IndexSet set_from_mask(std::uint32_t mask) {
  std::vector<std::uint32_t> elems;
  while (mask != 0) {
    const std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(mask));
    elems.push_back(j);
    mask &= mask - 1;
  }
  return IndexSet::from_elements(std::move(elems));
}

}  // namespace

SearchResult class_radius_search(FunctionClass cls, std::size_t n_vars, std::size_t d,
                                 const SearchOptions& opts) {
  if (n_vars == 0 || n_vars > 20) {
    throw std::invalid_argument("class_radius_search: n_vars must lie in [1, 20]");
  }
  if (cls != FunctionClass::All && (d == 0 || d > n_vars)) {
    throw std::invalid_argument("class_radius_search: d must lie in [1, n_vars]");
  }
  std::vector<IndexSet> family;
  for (std::uint32_t mask = 0; mask < (1u << n_vars); ++mask) {
    const unsigned w = static_cast<unsigned>(std::popcount(mask));
    const bool keep = cls == FunctionClass::All ||
                      (cls == FunctionClass::Homogeneous ? w == d : w <= d);
    if (keep) family.push_back(set_from_mask(mask));
  }
  SearchResult result;
  result.min_radius = std::numeric_limits<double>::infinity();
  result.minimizer = BooleanPolynomial(n_vars);
  auto consider = [&](const BooleanPolynomial& f) {
    const RadiusResult r = boolean_radius(f, opts.norm);
    if (r.is_infinite) return;
    ++result.evaluated;
    result.max_residual = std::max(result.max_residual, r.residual);
    if (r.value < result.min_radius) {
      result.min_radius = r.value;
      result.minimizer = f;
    }
  };
  Rng rng(opts.seed, 0);
  for (std::size_t trial = 0; trial < opts.ensemble; ++trial) {
    BooleanPolynomial f(n_vars);
    const bool signs = (trial % 2) == 1;
    for (const IndexSet& s : family) {
      const double c = signs ? static_cast<double>(rng.sign()) : rng.gaussian();
      f.set_coefficient(s, cplx{c, 0.0});
    }
    consider(f);
  }
  if (cls == FunctionClass::All && n_vars <= 4) {
    result.enumerated_sign_functions = true;
    const std::size_t pts = std::size_t{1} << n_vars;
    const std::uint64_t all_patterns = std::uint64_t{1} << pts;
    const kernels::Funcs& k = kernels::active_kernels();
    std::vector<double> table(pts);
    for (std::uint64_t pattern = 1; pattern + 1 < all_patterns; ++pattern) {
      for (std::size_t x = 0; x < pts; ++x) {
        table[x] = ((pattern >> x) & 1u) ? -1.0 : 1.0;
      }
      k.fwht(table.data(), static_cast<unsigned>(n_vars));
      BooleanPolynomial f(n_vars);
      const double scale = 1.0 / static_cast<double>(pts);
      for (std::size_t mask = 0; mask < pts; ++mask) {
        if (table[mask] != 0.0) {
          f.set_coefficient(set_from_mask(static_cast<std::uint32_t>(mask)),
                            cplx{table[mask] * scale, 0.0});
        }
      }
      consider(f);
    }
  }
  if (result.evaluated == 0) {
    throw std::runtime_error("class_radius_search: every draw was degenerate");
  }
  return result;
}

double reference_min_radius(std::size_t n_vars) {
  if (n_vars == 0) {
    throw std::invalid_argument("reference_min_radius: n_vars must be positive");
  }
  return std::exp2(1.0 / static_cast<double>(n_vars)) - 1.0;
}

}  // namespace qcube
