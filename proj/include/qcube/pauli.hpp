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
 * Sparse polynomials in tensor products of single-qubit Pauli matrices.
 *
 * A PauliIndex is a word s in {0,1,2,3}^n naming the tensor product
 * sigma_s = sigma_{s_1} x ... x sigma_{s_n} (0 = identity, 1 = X, 2 = Y,
 * 3 = Z). A PauliPolynomial stores a finite map from words to complex
 * coefficients and represents the observable A = sum_s  A_s sigma_s on
 * (C^2)^{x n}. Since the sigma_s form an orthogonal basis, coefficients
 * are unique and the zero polynomial has an empty term map.
 */

#include <bit>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcube {

using cplx = std::complex<double>;

/// Largest qubit count for which dense 2^n x 2^n matrices may be formed.
inline constexpr std::size_t kDenseQubitLimit = 10;

/// Thrown when an operation would materialize state beyond kDenseQubitLimit.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pauli symbol codes used throughout: 0 = I, 1 = X, 2 = Y, 3 = Z.
inline constexpr char kPauliChars[4] = {'I', 'X', 'Y', 'Z'};

/**
 * A word in {0,1,2,3}^n, packed two bits per site.
 *
 * Ordering is lexicographic by site with site 1 most significant and
 * symbols ordered I < X < Y < Z; words of different n never compare equal
 * and shorter n sorts first.
 */
class PauliIndex {
 public:
  /// The identity word on n sites.
  explicit PauliIndex(std::size_t n);

  /// Parses a string over {I,X,Y,Z}, one character per site.
  static PauliIndex from_string(std::string_view text);

  /// The weight-one word with symbol `sym` (1..3) at `site` (0-based).
  static PauliIndex single(std::size_t n, std::size_t site, unsigned sym);

  std::size_t n() const { return n_; }

  /// Symbol at `site` (0-based), in {0,1,2,3}.
  unsigned symbol(std::size_t site) const;

  void set_symbol(std::size_t site, unsigned sym);

  /// Number of non-identity sites.
  std::size_t weight() const;

  bool is_identity() const { return weight() == 0; }

  std::string str() const;

  bool operator==(const PauliIndex& other) const;
  std::strong_ordering operator<=>(const PauliIndex& other) const;

  /// Calls fn(site, symbol) for each non-identity site, in site order.
  template <typename F>
  void for_each_non_identity(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t rest = words_[w];
      while (rest != 0) {
        const int bit = std::countr_zero(rest);
        const std::size_t slot = static_cast<std::size_t>(bit) / 2;
        fn(w * kSitesPerWord + slot, static_cast<unsigned>((words_[w] >> (2 * slot)) & 3u));
        rest &= ~(std::uint64_t{3} << (2 * slot));
      }
    }
  }

 private:
  static constexpr std::size_t kSitesPerWord = 32;

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/**
 * Finite linear combination sum_s  A_s sigma_s with complex coefficients.
 *
 * Terms with exactly-zero coefficient are never stored, so term_count()
 * and degree() reflect the support. Iteration order over terms() is the
 * PauliIndex ordering and is deterministic.
 */
class PauliPolynomial {
 public:
  PauliPolynomial() = default;
  explicit PauliPolynomial(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PauliIndex, cplx>& terms() const { return terms_; }

  /// Coefficient of `s`, zero if absent. Requires s.n() == n().
  cplx coefficient(const PauliIndex& s) const;

  /// Sets the coefficient of `s`, erasing the term when `value` is zero.
  void set_coefficient(const PauliIndex& s, cplx value);

  /// Adds `value` to the coefficient of `s`, erasing on exact cancellation.
  void add_term(const PauliIndex& s, cplx value);

  /// Max weight over stored terms; 0 for the zero polynomial.
  std::size_t degree() const;

  /// Copy with every term of weight > d removed.
  PauliPolynomial truncated(std::size_t d) const;

  /// True iff every stored coefficient has |imag| <= tol.
  bool is_hermitian(double tol = 0.0) const;

  PauliPolynomial& operator+=(const PauliPolynomial& other);
  PauliPolynomial& operator-=(const PauliPolynomial& other);
  PauliPolynomial& operator*=(cplx scale);

  friend PauliPolynomial operator+(PauliPolynomial lhs, const PauliPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PauliPolynomial operator-(PauliPolynomial lhs, const PauliPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend PauliPolynomial operator*(PauliPolynomial p, cplx scale) {
    p *= scale;
    return p;
  }
  friend PauliPolynomial operator*(cplx scale, PauliPolynomial p) {
    p *= scale;
    return p;
  }

  /**
   * Serializes as one term per line, "<word> <re> <im>", with 17
   * significant digits so that parsing the output reproduces every
   * coefficient bit for bit. Lines appear in term order.
   */
  std::string to_text() const;

  /**
   * Parses the to_text() format. '#' starts a comment, blank lines are
   * skipped, n is inferred from the first word, and repeated words
   * accumulate. Throws std::invalid_argument on inconsistent word
   * lengths, bad symbols, or malformed numbers.
   */
  static PauliPolynomial from_text(std::string_view text);

 private:
  std::size_t n_ = 0;
  std::map<PauliIndex, cplx> terms_;
};

/// Sum of |P_s - Q_s|^2 over the union of supports. Requires equal n.
double l2_distance_sq(const PauliPolynomial& p, const PauliPolynomial& q);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

}  // namespace qcube
