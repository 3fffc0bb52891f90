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

#include "qcube/pauli.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcube {

namespace {

// Two-bit site fields interleaved in a 64-bit word; this mask selects the
// low bit of every field.
constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

std::size_t words_for(std::size_t n) { return (n + 31) / 32; }

}  // namespace

PauliIndex::PauliIndex(std::size_t n)
    : n_(static_cast<std::uint32_t>(n)), words_(words_for(n), 0) {
  if (n > 0xFFFFFFFFull) throw std::invalid_argument("PauliIndex: n too large");
}

PauliIndex PauliIndex::from_string(std::string_view text) {
  PauliIndex s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned sym = 0;
    switch (text[i]) {
      case 'I': sym = 0; break;
      case 'X': sym = 1; break;
      case 'Y': sym = 2; break;
      case 'Z': sym = 3; break;
      default:
        throw std::invalid_argument(std::string("PauliIndex: bad symbol '") + text[i] + "'");
    }
    s.set_symbol(i, sym);
  }
  return s;
}

PauliIndex PauliIndex::single(std::size_t n, std::size_t site, unsigned sym) {
  if (sym < 1 || sym > 3) throw std::invalid_argument("PauliIndex::single: symbol must be 1..3");
  PauliIndex s(n);
  s.set_symbol(site, sym);
  return s;
}

unsigned PauliIndex::symbol(std::size_t site) const {
  if (site >= n_) throw std::invalid_argument("PauliIndex::symbol: site out of range");
  return static_cast<unsigned>((words_[site / kSitesPerWord] >> (2 * (site % kSitesPerWord))) & 3u);
}

void PauliIndex::set_symbol(std::size_t site, unsigned sym) {
  if (site >= n_) throw std::invalid_argument("PauliIndex::set_symbol: site out of range");
  if (sym > 3) throw std::invalid_argument("PauliIndex::set_symbol: symbol must be 0..3");
  std::uint64_t& w = words_[site / kSitesPerWord];
  const unsigned shift = 2 * (site % kSitesPerWord);
  w = (w & ~(std::uint64_t{3} << shift)) | (std::uint64_t{sym} << shift);
}

std::size_t PauliIndex::weight() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += std::popcount((w | (w >> 1)) & kLowBits);
  return count;
}

std::string PauliIndex::str() const {
  std::string out(n_, 'I');
  for (std::size_t i = 0; i < n_; ++i) out[i] = kPauliChars[symbol(i)];
  return out;
}

bool PauliIndex::operator==(const PauliIndex& other) const {
  return n_ == other.n_ && words_ == other.words_;
}

std::strong_ordering PauliIndex::operator<=>(const PauliIndex& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    // The lowest differing bit locates the first site whose symbols differ.
    const std::size_t slot = static_cast<std::size_t>(std::countr_zero(diff)) / 2;
    const unsigned a = static_cast<unsigned>((words_[w] >> (2 * slot)) & 3u);
    const unsigned b = static_cast<unsigned>((other.words_[w] >> (2 * slot)) & 3u);
    return a <=> b;
  }
  return std::strong_ordering::equal;
}

cplx PauliPolynomial::coefficient(const PauliIndex& s) const {
  if (s.n() != n_) throw std::invalid_argument("PauliPolynomial: word size mismatch");
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{0.0, 0.0} : it->second;
}

void PauliPolynomial::set_coefficient(const PauliIndex& s, cplx value) {
  if (s.n() != n_) throw std::invalid_argument("PauliPolynomial: word size mismatch");
  if (value == cplx{0.0, 0.0}) {
    terms_.erase(s);
  } else {
    terms_.insert_or_assign(s, value);
  }
}

void PauliPolynomial::add_term(const PauliIndex& s, cplx value) {
  if (s.n() != n_) throw std::invalid_argument("PauliPolynomial: word size mismatch");
  auto [it, inserted] = terms_.try_emplace(s, value);
  if (!inserted) {
    it->second += value;
    if (it->second == cplx{0.0, 0.0}) terms_.erase(it);
  } else if (value == cplx{0.0, 0.0}) {
    terms_.erase(it);
  }
}

std::size_t PauliPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [s, c] : terms_) d = std::max(d, s.weight());
  return d;
}

PauliPolynomial PauliPolynomial::truncated(std::size_t d) const {
  PauliPolynomial out(n_);
  for (const auto& [s, c] : terms_) {
    if (s.weight() <= d) out.terms_.emplace(s, c);
  }
  return out;
}

bool PauliPolynomial::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliPolynomial& PauliPolynomial::operator+=(const PauliPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("PauliPolynomial: size mismatch in +=");
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

PauliPolynomial& PauliPolynomial::operator-=(const PauliPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("PauliPolynomial: size mismatch in -=");
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

PauliPolynomial& PauliPolynomial::operator*=(cplx scale) {
  if (scale == cplx{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scale;
  return *this;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string PauliPolynomial::to_text() const {
  if (n_ == 0) throw std::invalid_argument("PauliPolynomial::to_text: n must be positive");
  if (terms_.empty()) {
    // A zero-coefficient identity line keeps n recoverable by the parser.
    return PauliIndex(n_).str() + " 0 0\n";
  }
  std::string out;
  for (const auto& [s, c] : terms_) {
    out += s.str();
    out += ' ';
    out += format_double(c.real());
    out += ' ';
    out += format_double(c.imag());
    out += '\n';
  }
  return out;
}

namespace {

double parse_double_token(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("PauliPolynomial::from_text: malformed number on line " +
                                std::to_string(line_no));
  }
  return value;
}

}  // namespace

PauliPolynomial PauliPolynomial::from_text(std::string_view text) {
  PauliPolynomial out;
  bool have_n = false;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string word, re, im, extra;
    if (!(fields >> word)) continue;
    if (!(fields >> re >> im) || (fields >> extra)) {
      throw std::invalid_argument(
          "PauliPolynomial::from_text: expected '<word> <re> <im>' on line " +
          std::to_string(line_no));
    }
    PauliIndex s = PauliIndex::from_string(word);
    if (!have_n) {
      out = PauliPolynomial(s.n());
      have_n = true;
    } else if (s.n() != out.n()) {
      throw std::invalid_argument("PauliPolynomial::from_text: inconsistent word length on line " +
                                  std::to_string(line_no));
    }
    out.add_term(s, cplx{parse_double_token(re, line_no), parse_double_token(im, line_no)});
  }
  if (!have_n) throw std::invalid_argument("PauliPolynomial::from_text: no terms found");
  return out;
}

double l2_distance_sq(const PauliPolynomial& p, const PauliPolynomial& q) {
  if (p.n() != q.n()) throw std::invalid_argument("l2_distance_sq: size mismatch");
  double sum = 0.0;
  auto pi = p.terms().begin();
  auto qi = q.terms().begin();
  while (pi != p.terms().end() || qi != q.terms().end()) {
    if (qi == q.terms().end() || (pi != p.terms().end() && pi->first < qi->first)) {
      sum += std::norm(pi->second);
      ++pi;
    } else if (pi == p.terms().end() || qi->first < pi->first) {
      sum += std::norm(qi->second);
      ++qi;
    } else {
      sum += std::norm(pi->second - qi->second);
      ++pi;
      ++qi;
    }
  }
  return sum;
}

}  // namespace qcube
