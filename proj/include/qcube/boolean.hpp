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
 * Multilinear polynomials on the Boolean cube {-1,+1}^m.
 *
 * A function f is stored by its Fourier expansion f(x) = sum_S f(S) chi_S(x)
 * with chi_S(x) = prod_{j in S} x_j over subsets S of the m coordinates.
 * Coordinates are 0-based in code; the text forms produced by str() print
 * them 1-based, matching the convention used everywhere in this project's
 * reports and error messages.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcube/pauli.hpp"
#include "qcube/rng.hpp"

namespace qcube {

/// A finite subset of coordinates {0, 1, ...}, kept sorted.
class IndexSet {
 public:
  IndexSet() = default;

  /// Builds from 0-based elements; rejects duplicates.
  static IndexSet of(std::initializer_list<std::uint32_t> elems);
  static IndexSet from_elements(std::vector<std::uint32_t> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(std::uint32_t j) const;
  const std::vector<std::uint32_t>& elements() const { return elems_; }

  /// Largest element; requires a nonempty set.
  std::uint32_t max_element() const;

  /// Bitmask with bit j set for each element j; requires max_element < 64.
  std::uint64_t mask64() const;

  /// 1-based display form, e.g. "{1,6}"; the empty set prints "{}".
  std::string str() const;

  bool operator==(const IndexSet&) const = default;
  std::strong_ordering operator<=>(const IndexSet& other) const {
    return std::lexicographical_compare_three_way(elems_.begin(), elems_.end(),
                                                  other.elems_.begin(), other.elems_.end());
  }

 private:
  std::vector<std::uint32_t> elems_;
};

/// A point of {-1,+1}^m. Internally bit j set means coordinate j is -1.
class SignVector {
 public:
  SignVector() = default;

  /// All-(+1) point.
  explicit SignVector(std::size_t m);

  /// m <= 64; bit j of `bits` set means coordinate j is -1.
  static SignVector from_bits(std::size_t m, std::uint64_t bits);

  /// Uniformly random point.
  static SignVector random(std::size_t m, Rng& rng);

  /**
   * Parses "+-+..." or the three-block form "++-|-++|+--". When '|'
   * appears there must be exactly three equal-length blocks.
   */
  static SignVector parse(std::string_view text);

  std::size_t m() const { return m_; }
  int sign(std::size_t j) const;
  void set_sign(std::size_t j, int value);
  void flip(std::size_t j);

  /// Packed form for m <= 64; bit j set means coordinate j is -1.
  std::uint64_t mask64() const;
  const std::vector<std::uint64_t>& mask_words() const { return words_; }

  /// '+'/'-' characters; three '|'-separated blocks when m is divisible by 3.
  std::string str() const;

  bool operator==(const SignVector&) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Character chi_S(x) = prod_{j in S} x_j, in {-1,+1}.
int chi(const IndexSet& s, const SignVector& x);

/// Multilinear polynomial on {-1,+1}^m given by its Fourier coefficients.
class BooleanPolynomial {
 public:
  BooleanPolynomial() = default;
  explicit BooleanPolynomial(std::size_t m) : m_(m) {}

  std::size_t m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<IndexSet, cplx>& terms() const { return terms_; }

  cplx coefficient(const IndexSet& s) const;
  void set_coefficient(const IndexSet& s, cplx value);
  void add_term(const IndexSet& s, cplx value);

  /// Max |S| over stored terms; 0 for the zero polynomial.
  std::size_t degree() const;

  BooleanPolynomial truncated(std::size_t d) const;

  /// True iff every stored coefficient has |imag| <= tol.
  bool is_real(double tol = 0.0) const;

  /// Pointwise value sum_S f(S) chi_S(x); requires x.m() == m().
  cplx evaluate(const SignVector& x) const;

 private:
  void check_term(const IndexSet& s) const;

  std::size_t m_ = 0;
  std::map<IndexSet, cplx> terms_;
};

}  // namespace qcube
