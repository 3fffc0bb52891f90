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

#include "qcube/dense.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace qcube {

Eigen::Matrix2cd pauli_matrix(unsigned sym) {
  Eigen::Matrix2cd m;
  switch (sym) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cplx{0, -1}, cplx{0, 1}, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: symbol must be 0..3");
  }
  return m;
}

namespace {

void check_capacity(std::size_t n, const char* what) {
  if (n > kDenseQubitLimit) {
    throw capacity_error(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds dense limit " + std::to_string(kDenseQubitLimit));
  }
}

}  // namespace

DenseMatrix to_dense(const PauliPolynomial& p) {
  check_capacity(p.n(), "to_dense");
  const std::size_t n = p.n();
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [word, coeff] : p.terms()) {
    // Each sigma_s has exactly one nonzero per row, with entries in
    // {1, -1, i, -i}; walk rows and accumulate that single entry.
    for (std::size_t row = 0; row < dim; ++row) {
      std::size_t col = row;
      cplx entry{1.0, 0.0};
      word.for_each_non_identity([&](std::size_t site, unsigned sym) {
        const std::size_t bit = std::size_t{1} << (n - 1 - site);
        const bool r = (row & bit) != 0;
        switch (sym) {
          case 1:
            col ^= bit;
            break;
          case 2:
            col ^= bit;
            entry *= r ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
            break;
          default:
            if (r) entry = -entry;
            break;
        }
      });
      m(row, col) += coeff * entry;
    }
  }
  return m;
}

namespace {

void transform_block(const DenseMatrix& block, PauliIndex& scratch, std::size_t site,
                     PauliPolynomial& out) {
  if (block.rows() == 1) {
    if (block(0, 0) != cplx{0.0, 0.0}) out.set_coefficient(scratch, block(0, 0));
    return;
  }
  const Eigen::Index h = block.rows() / 2;
  const auto a = block.topLeftCorner(h, h);
  const auto b = block.topRightCorner(h, h);
  const auto c = block.bottomLeftCorner(h, h);
  const auto d = block.bottomRightCorner(h, h);
  const cplx half{0.5, 0.0};
  const cplx half_i{0.0, 0.5};
  scratch.set_symbol(site, 0);
  transform_block((a + d) * half, scratch, site + 1, out);
  scratch.set_symbol(site, 1);
  transform_block((b + c) * half, scratch, site + 1, out);
  scratch.set_symbol(site, 2);
  transform_block((b - c) * half_i, scratch, site + 1, out);
  scratch.set_symbol(site, 3);
  transform_block((a - d) * half, scratch, site + 1, out);
  scratch.set_symbol(site, 0);
}

}  // namespace

PauliPolynomial fourier_coefficients(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("fourier_coefficients: matrix must be square and nonempty");
  }
  const auto dim = static_cast<std::size_t>(m.rows());
  if (!std::has_single_bit(dim)) {
    throw std::invalid_argument("fourier_coefficients: dimension must be a power of two");
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
  PauliPolynomial out(n);
  PauliIndex scratch(n);
  transform_block(m, scratch, 0, out);
  return out;
}

namespace {

// Eigenvalues of [[0, M], [M^H, 0]] are the singular values of M in +/-
// pairs; this embedding turns any singular-value question Hermitian.
Eigen::VectorXd embedded_spectrum(const DenseMatrix& m) {
  const Eigen::Index dim = m.rows();
  DenseMatrix h = DenseMatrix::Zero(2 * dim, 2 * dim);
  h.topRightCorner(dim, dim) = m;
  h.bottomLeftCorner(dim, dim) = m.adjoint();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double operator_norm(const PauliPolynomial& p) {
  check_capacity(p.n(), "operator_norm");
  if (p.is_zero()) return 0.0;
  const DenseMatrix m = to_dense(p);
  if (p.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  return embedded_spectrum(m).cwiseAbs().maxCoeff();
}

double schatten_norm(const PauliPolynomial& p, double power) {
  if (!(power >= 1.0)) throw std::invalid_argument("schatten_norm: power must be >= 1");
  check_capacity(p.n(), "schatten_norm");
  if (p.is_zero()) return 0.0;
  const DenseMatrix m = to_dense(p);
  const double dim = static_cast<double>(std::size_t{1} << p.n());
  double sum = 0.0;
  if (p.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    for (double v : solver.eigenvalues()) sum += std::pow(std::abs(v), power);
  } else {
    // The embedded spectrum lists every singular value twice (as +/- s).
    for (double v : embedded_spectrum(m)) sum += std::pow(std::abs(v), power);
    sum /= 2.0;
  }
  return std::pow(sum / dim, 1.0 / power);
}

}  // namespace qcube
