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
 * Bohr radii of cube polynomials and qubit observables.
 *
 * The radius of f is the largest r >= 0 with
 *
 *   sum_S |f-hat(S)| r^{|S|}  <=  sup_x |f(x)|,
 *
 * found as the root of the monotone left side; an observable A uses its
 * Pauli coefficients against the operator norm in the same way. A
 * constant (or identity-only) input satisfies the inequality for every r
 * and is reported as infinite.
 *
 * Because the lift divides each weight-w coefficient by 3^w while the
 * sup norm can only shrink, the cube radius of the lift of A never
 * exceeds three times the radius of A; radius_inequality_check tests
 * exactly that, and class_radius_search estimates the worst (smallest)
 * radius over a class of cube polynomials, whose floor over all
 * functions on n coordinates is 2^{1/n} - 1.
 */

#include <cstdint>
#include <vector>

#include "qcube/bh.hpp"
#include "qcube/boolean.hpp"
#include "qcube/pauli.hpp"

namespace qcube {

struct RadiusResult {
  /// The radius; +infinity when is_infinite is set.
  double value = 0.0;
  bool is_infinite = false;
  /// |left side - norm| at the returned radius (0 when infinite).
  double residual = 0.0;
  /// The norm the equation was solved against.
  double norm_used = 0.0;
  /// False when the norm is only a sampled lower bound.
  bool norm_exhaustive = true;
};

/// Radius of a cube polynomial. Throws std::invalid_argument on the zero
/// polynomial.
RadiusResult boolean_radius(const BooleanPolynomial& f, const SupNormOptions& opts = {});

/// Radius of an observable against its operator norm. Throws
/// std::invalid_argument on the zero polynomial and capacity_error when
/// the dense norm is out of reach.
RadiusResult quantum_radius(const PauliPolynomial& a);

struct InequalityCheck {
  RadiusResult boolean_side;
  RadiusResult quantum_side;
  /// Both sides infinite (identity-only observable): nothing to compare.
  bool degenerate = false;
  /// boolean radius of the lift <= 3 * observable radius + 1e-9.
  bool passed = false;
};

/// Compares the radius of lift(a) on 3n coordinates with 3x the radius
/// of a.
InequalityCheck radius_inequality_check(const PauliPolynomial& a, const SupNormOptions& opts = {});

enum class FunctionClass {
  /// Every multilinear function; the degree argument is ignored.
  All,
  /// Only terms of size exactly d.
  Homogeneous,
  /// Terms of size <= d with the top layer forced nonzero.
  ExactDegree,
  /// Terms of size <= d.
  UpToDegree,
};

struct SearchOptions {
  /// Random draws per class (half Gaussian, half sign coefficients).
  std::size_t ensemble = 200;
  std::uint64_t seed = 1;
  SupNormOptions norm;
};

struct SearchResult {
  double min_radius = 0.0;
  BooleanPolynomial minimizer{0};
  /// Functions whose radius entered the minimum.
  std::size_t evaluated = 0;
  /// True when every sign-valued function was also enumerated (class
  /// All with at most 4 coordinates).
  bool enumerated_sign_functions = false;
  /// Largest equation residual seen across the search.
  double max_residual = 0.0;
};

/**
 * Smallest radius over seeded random draws from the class (and, for
 * class All on n_vars <= 4, over every nonconstant sign-valued
 * function). Coefficients are real; constant draws are skipped.
 */
SearchResult class_radius_search(FunctionClass cls, std::size_t n_vars, std::size_t d,
                                 const SearchOptions& opts = {});

/// The all-functions floor 2^{1/n} - 1 on n coordinates.
double reference_min_radius(std::size_t n_vars);

}  // namespace qcube
