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
 * The bridge between Pauli polynomials on n qubits and multilinear
 * polynomials on the Boolean cube {-1,+1}^{3n}.
 *
 * Cube coordinates come in three blocks of n: coordinate (kappa-1)*n + i
 * (0-based site i, axis kappa in {1,2,3}) carries the sign epsilon_i^{(kappa)}.
 * A word s maps to the subset q(s) collecting, for every non-identity site,
 * the coordinate of its axis. q is injective; subsets that touch one site
 * through two axes are outside its image, and index_p reports that as an
 * empty optional rather than an error.
 *
 * The lift of A = sum_s  A_s sigma_s is the cube polynomial with
 * f(q(s)) = 3^{-|s|}  A_s. Its defining property, checked extensively by
 * tests: for every sign vector epsilon, f_A(epsilon) equals the expectation
 * tr[A rho(epsilon)] of A in the product state rho(epsilon) assembled from
 * the fixed single-qubit eigenvector table below. Consequently the sup of
 * |f_A| over the cube never exceeds the operator norm of A.
 */

#include <Eigen/Dense>
#include <optional>

#include "qcube/boolean.hpp"
#include "qcube/dense.hpp"
#include "qcube/pauli.hpp"

namespace qcube {

/**
 * Unit eigenvector of sigma_kappa with eigenvalue eps in {-1,+1}:
 *
 *   kappa = 1: (1, +/-1)/sqrt(2)
 *   kappa = 2: (1, +/-i)/sqrt(2)
 *   kappa = 3: (1, 0) for +1 and (0, 1) for -1
 */
Eigen::Vector2cd pauli_eigenvector(unsigned kappa, int eps);

/**
 * Max deviation of the table from its contract, over all 18 combinations
 * of axis j, axis k, and sign eps: |<sigma_j e^k_eps, e^k_eps> - delta_{jk} eps|
 * together with each vector's norm defect. Tests pin this below 1e-14.
 */
double eigenvector_table_residual();

/// Subset q(s) of the 3n cube coordinates owned by word s.
IndexSet index_q(const PauliIndex& s);

/**
 * Inverse of q on its image: the word with s.n() == n mapping to `s`, or
 * an empty optional when `s` touches some site through two axes. Elements
 * of `s` must lie below 3n.
 */
std::optional<PauliIndex> index_p(const IndexSet& s, std::size_t n);

/// 3^w as an exact double (w stays far below the 2^53 exactness bound).
double pow3(std::size_t w);

/// The cube polynomial f_A on {-1,+1}^{3n} with f(q(s)) = 3^{-|s|} A_s.
BooleanPolynomial lift(const PauliPolynomial& p);

/**
 * Inverse of lift:  A_{p(S)} = 3^{|S|} f(S). Requires m divisible by 3 and
 * every support set inside the image of q; violations name the set.
 */
PauliPolynomial unlift(const BooleanPolynomial& f);

/**
 * The n-qubit product state rho(eps) for eps in {-1,+1}^{3n}: each qubit
 * averages the three projectors onto pauli_eigenvector(kappa, eps_i^{(kappa)})
 * with weight 1/3. Dense, so n obeys kDenseQubitLimit.
 */
DenseMatrix product_state(const SignVector& eps);

/// tr[A rho(eps)] evaluated sparsely: sum_s  A_s 3^{-|s|} prod eps_i^{(s_i)}.
cplx expectation(const PauliPolynomial& p, const SignVector& eps);

/**
 * Embeds a cube polynomial on {-1,+1}^m as an m-qubit observable by
 * substituting sigma_3 at site j for coordinate x_j. The result is
 * diagonal in the computational basis with values of f on the diagonal,
 * so its operator norm equals the sup-norm of f.
 */
PauliPolynomial embed_diagonal(const BooleanPolynomial& f);

}  // namespace qcube
