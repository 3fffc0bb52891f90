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
 * Dense-matrix realizations of Pauli polynomials.
 *
 * Basis convention: basis state |b_1 ... b_n> of n qubits has index
 * sum_j b_j 2^{n-j}, i.e. site 1 owns the most significant bit, matching
 * the Kronecker product sigma_{s_1} x ... x sigma_{s_n} evaluated left to
 * right. Matrix norms below are normalized: the Schatten p-norm divides
 * the trace by the dimension 2^n, so the identity has norm 1 for every p.
 *
 * Everything here materializes 2^n x 2^n matrices and therefore enforces
 * kDenseQubitLimit; the sparse routines elsewhere have no such bound.
 */

#include <Eigen/Dense>

#include "qcube/pauli.hpp"

namespace qcube {

using DenseMatrix = Eigen::MatrixXcd;

/// The 2x2 matrix of symbol `sym` in {0,1,2,3}.
Eigen::Matrix2cd pauli_matrix(unsigned sym);

/// Dense 2^n x 2^n realization of `p`. Throws capacity_error past the limit.
DenseMatrix to_dense(const PauliPolynomial& p);

/**
 * Coefficient recovery: returns the unique polynomial whose dense
 * realization is `m`, via  A_s = 2^{-n} tr(sigma_s m). Requires a square
 * matrix of power-of-two dimension.
 */
PauliPolynomial fourier_coefficients(const DenseMatrix& m);

/// Largest singular value of the dense realization.
double operator_norm(const PauliPolynomial& p);

/// Normalized Schatten norm (2^{-n} tr |M|^power)^{1/power}, power >= 1.
double schatten_norm(const PauliPolynomial& p, double power);

}  // namespace qcube
