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

#include "qcube/boolean.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcube {

IndexSet IndexSet::of(std::initializer_list<std::uint32_t> elems) {
  return from_elements(std::vector<std::uint32_t>(elems));
}

IndexSet IndexSet::from_elements(std::vector<std::uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw std::invalid_argument("IndexSet: duplicate element");
  }
  IndexSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool IndexSet::contains(std::uint32_t j) const {
  return std::binary_search(elems_.begin(), elems_.end(), j);
}

std::uint32_t IndexSet::max_element() const {
  if (elems_.empty()) throw std::invalid_argument("IndexSet::max_element: empty set");
  return elems_.back();
}

std::uint64_t IndexSet::mask64() const {
  std::uint64_t mask = 0;
  for (std::uint32_t j : elems_) {
    if (j >= 64) throw std::invalid_argument("IndexSet::mask64: element exceeds 63");
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::string IndexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elems_[i] + 1);
  }
  out += '}';
  return out;
}

SignVector::SignVector(std::size_t m) : m_(m), words_((m + 63) / 64, 0) {}

SignVector SignVector::from_bits(std::size_t m, std::uint64_t bits) {
  if (m > 64) throw std::invalid_argument("SignVector::from_bits: m must be <= 64");
  if (m < 64 && (bits >> m) != 0) {
    throw std::invalid_argument("SignVector::from_bits: bits beyond m");
  }
  SignVector x(m);
  if (m > 0) x.words_[0] = bits;
  return x;
}

SignVector SignVector::random(std::size_t m, Rng& rng) {
  SignVector x(m);
  for (std::size_t w = 0; w < x.words_.size(); ++w) x.words_[w] = rng.next_u64();
  const std::size_t tail = m % 64;
  if (tail != 0 && !x.words_.empty()) {
    x.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return x;
}

SignVector SignVector::parse(std::string_view text) {
  std::string flat;
  if (text.find('|') != std::string_view::npos) {
    std::vector<std::string_view> blocks;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = text.find('|', start);
      if (bar == std::string_view::npos) {
        blocks.push_back(text.substr(start));
        break;
      }
      blocks.push_back(text.substr(start, bar - start));
      start = bar + 1;
    }
    if (blocks.size() != 3 || blocks[0].size() != blocks[1].size() ||
        blocks[1].size() != blocks[2].size() || blocks[0].empty()) {
      throw std::invalid_argument("SignVector::parse: expected three equal blocks");
    }
    for (auto b : blocks) flat.append(b);
  } else {
    flat.assign(text);
  }
  if (flat.empty()) throw std::invalid_argument("SignVector::parse: empty input");
  SignVector x(flat.size());
  for (std::size_t j = 0; j < flat.size(); ++j) {
    switch (flat[j]) {
      case '+': break;
      case '-': x.flip(j); break;
      default: throw std::invalid_argument("SignVector::parse: expected '+' or '-'");
    }
  }
  return x;
}

int SignVector::sign(std::size_t j) const {
  if (j >= m_) throw std::invalid_argument("SignVector::sign: index out of range");
  return ((words_[j / 64] >> (j % 64)) & 1u) ? -1 : 1;
}

void SignVector::set_sign(std::size_t j, int value) {
  if (j >= m_) throw std::invalid_argument("SignVector::set_sign: index out of range");
  if (value != 1 && value != -1) {
    throw std::invalid_argument("SignVector::set_sign: value must be +1 or -1");
  }
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (value == -1) {
    words_[j / 64] |= bit;
  } else {
    words_[j / 64] &= ~bit;
  }
}

void SignVector::flip(std::size_t j) {
  if (j >= m_) throw std::invalid_argument("SignVector::flip: index out of range");
  words_[j / 64] ^= std::uint64_t{1} << (j % 64);
}

std::uint64_t SignVector::mask64() const {
  if (m_ > 64) throw std::invalid_argument("SignVector::mask64: m must be <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string SignVector::str() const {
  std::string out;
  const std::size_t block = (m_ % 3 == 0 && m_ > 0) ? m_ / 3 : m_;
  for (std::size_t j = 0; j < m_; ++j) {
    if (j > 0 && j % block == 0) out += '|';
    out += sign(j) == 1 ? '+' : '-';
  }
  return out;
}

int chi(const IndexSet& s, const SignVector& x) {
  int parity = 0;
  for (std::uint32_t j : s.elements()) parity ^= (x.sign(j) == -1);
  return parity ? -1 : 1;
}

void BooleanPolynomial::check_term(const IndexSet& s) const {
  if (!s.empty() && s.max_element() >= m_) {
    throw std::invalid_argument("BooleanPolynomial: coordinate " +
                                std::to_string(s.max_element() + 1) + " exceeds m = " +
                                std::to_string(m_));
  }
}

cplx BooleanPolynomial::coefficient(const IndexSet& s) const {
  check_term(s);
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{0.0, 0.0} : it->second;
}

void BooleanPolynomial::set_coefficient(const IndexSet& s, cplx value) {
  check_term(s);
  if (value == cplx{0.0, 0.0}) {
    terms_.erase(s);
  } else {
    terms_.insert_or_assign(s, value);
  }
}

void BooleanPolynomial::add_term(const IndexSet& s, cplx value) {
  check_term(s);
  auto [it, inserted] = terms_.try_emplace(s, value);
  if (!inserted) {
    it->second += value;
    if (it->second == cplx{0.0, 0.0}) terms_.erase(it);
  } else if (value == cplx{0.0, 0.0}) {
    terms_.erase(it);
  }
}

std::size_t BooleanPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [s, c] : terms_) d = std::max(d, s.size());
  return d;
}

BooleanPolynomial BooleanPolynomial::truncated(std::size_t d) const {
  BooleanPolynomial out(m_);
  for (const auto& [s, c] : terms_) {
    if (s.size() <= d) out.terms_.emplace(s, c);
  }
  return out;
}

bool BooleanPolynomial::is_real(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

cplx BooleanPolynomial::evaluate(const SignVector& x) const {
  if (x.m() != m_) throw std::invalid_argument("BooleanPolynomial::evaluate: size mismatch");
  cplx sum{0.0, 0.0};
  for (const auto& [s, c] : terms_) {
    sum += c * static_cast<double>(chi(s, x));
  }
  return sum;
}

}  // namespace qcube
