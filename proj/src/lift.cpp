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

#include "qcube/lift.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcube {

Eigen::Vector2cd pauli_eigenvector(unsigned kappa, int eps) {
  if (kappa < 1 || kappa > 3) {
    throw std::invalid_argument("pauli_eigenvector: axis must be 1..3");
  }
  if (eps != 1 && eps != -1) {
    throw std::invalid_argument("pauli_eigenvector: sign must be +1 or -1");
  }
  const double isq2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd e;
  switch (kappa) {
    case 1: e << cplx{isq2, 0.0}, cplx{eps * isq2, 0.0}; break;
    case 2: e << cplx{isq2, 0.0}, cplx{0.0, eps * isq2}; break;
    default:
      if (eps == 1) {
        e << cplx{1.0, 0.0}, cplx{0.0, 0.0};
      } else {
        e << cplx{0.0, 0.0}, cplx{1.0, 0.0};
      }
      break;
  }
  return e;
}

double eigenvector_table_residual() {
  double worst = 0.0;
  for (unsigned k = 1; k <= 3; ++k) {
    for (int eps : {1, -1}) {
      const Eigen::Vector2cd e = pauli_eigenvector(k, eps);
      worst = std::max(worst, std::abs(e.norm() - 1.0));
      for (unsigned j = 1; j <= 3; ++j) {
        const cplx form = ((pauli_matrix(j) * e).adjoint() * e)(0, 0);
        const double expected = j == k ? eps : 0.0;
        worst = std::max(worst, std::abs(form - cplx{expected, 0.0}));
      }
    }
  }
  return worst;
}

IndexSet index_q(const PauliIndex& s) {
  std::vector<std::uint32_t> elems;
  const std::size_t n = s.n();
  s.for_each_non_identity([&](std::size_t site, unsigned sym) {
    elems.push_back(static_cast<std::uint32_t>((sym - 1) * n + site));
  });
  return IndexSet::from_elements(std::move(elems));
}

std::optional<PauliIndex> index_p(const IndexSet& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("index_p: n must be positive");
  if (!s.empty() && s.max_element() >= 3 * n) {
    throw std::invalid_argument("index_p: element " + std::to_string(s.max_element() + 1) +
                                " exceeds 3n = " + std::to_string(3 * n));
  }
  PauliIndex word(n);
  for (std::uint32_t flat : s.elements()) {
    const std::size_t site = flat % n;
    const unsigned kappa = static_cast<unsigned>(flat / n) + 1;
    if (word.symbol(site) != 0) return std::nullopt;
    word.set_symbol(site, kappa);
  }
  return word;
}

double pow3(std::size_t w) {
  double p = 1.0;
  for (std::size_t i = 0; i < w; ++i) p *= 3.0;
  return p;
}

BooleanPolynomial lift(const PauliPolynomial& p) {
  BooleanPolynomial f(3 * p.n());
  for (const auto& [s, a] : p.terms()) {
    f.set_coefficient(index_q(s), a / pow3(s.weight()));
  }
  return f;
}

PauliPolynomial unlift(const BooleanPolynomial& f) {
  if (f.m() == 0 || f.m() % 3 != 0) {
    throw std::invalid_argument("unlift: cube dimension " + std::to_string(f.m()) +
                                " is not 3n for a positive n");
  }
  const std::size_t n = f.m() / 3;
  PauliPolynomial p(n);
  for (const auto& [s, c] : f.terms()) {
    const std::optional<PauliIndex> word = index_p(s, n);
    if (!word.has_value()) {
      throw std::invalid_argument("unlift: support set " + s.str() +
                                  " touches a site through two axes");
    }
    p.set_coefficient(*word, c * pow3(s.size()));
  }
  return p;
}

DenseMatrix product_state(const SignVector& eps) {
  if (eps.m() == 0 || eps.m() % 3 != 0) {
    throw std::invalid_argument("product_state: sign vector length must be 3n");
  }
  const std::size_t n = eps.m() / 3;
  if (n > kDenseQubitLimit) {
    throw capacity_error("product_state: n = " + std::to_string(n) + " exceeds dense limit " +
                         std::to_string(kDenseQubitLimit));
  }
  DenseMatrix rho = DenseMatrix::Ones(1, 1);
  // Fold right to left so site 1 owns the most significant basis bit,
  // matching to_dense.
  for (std::size_t site = n; site-- > 0;) {
    Eigen::Matrix2cd local = Eigen::Matrix2cd::Zero();
    for (unsigned kappa = 1; kappa <= 3; ++kappa) {
      const int sgn = eps.sign((kappa - 1) * n + site);
      const Eigen::Vector2cd e = pauli_eigenvector(kappa, sgn);
      local += e * e.adjoint();
    }
    local /= 3.0;
    DenseMatrix next(rho.rows() * 2, rho.cols() * 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * rho.rows(), b * rho.cols(), rho.rows(), rho.cols()) = local(a, b) * rho;
      }
    }
    rho = std::move(next);
  }
  return rho;
}

cplx expectation(const PauliPolynomial& p, const SignVector& eps) {
  if (eps.m() != 3 * p.n()) {
    throw std::invalid_argument("expectation: sign vector length must be 3n");
  }
  const std::size_t n = p.n();
  cplx sum{0.0, 0.0};
  for (const auto& [s, a] : p.terms()) {
    bool negative = false;
    s.for_each_non_identity([&](std::size_t site, unsigned sym) {
      if (eps.sign((sym - 1) * n + site) == -1) negative = !negative;
    });
    const double weight = (negative ? -1.0 : 1.0) / pow3(s.weight());
    sum += a * weight;
  }
  return sum;
}

PauliPolynomial embed_diagonal(const BooleanPolynomial& f) {
  if (f.m() == 0) throw std::invalid_argument("embed_diagonal: m must be positive");
  PauliPolynomial p(f.m());
  for (const auto& [s, c] : f.terms()) {
    PauliIndex word(f.m());
    for (std::uint32_t j : s.elements()) word.set_symbol(j, 3);
    p.set_coefficient(word, c);
  }
  return p;
}

}  // namespace qcube
