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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qcube/bh.hpp"
#include "qcube/boolean.hpp"
#include "qcube/lift.hpp"
#include "qcube/pauli.hpp"
#include "qcube/rng.hpp"

using qcube::BhReport;
using qcube::BooleanPolynomial;
using qcube::cplx;
using qcube::IndexSet;
using qcube::PauliIndex;
using qcube::PauliPolynomial;
using qcube::SignVector;

TEST_CASE("Default coefficient bounds double with the degree", "[bh]") {
  REQUIRE(qcube::bh_default_bound(1) == 2.0);
  REQUIRE(qcube::bh_default_bound(2) == 4.0);
  REQUIRE(qcube::bh_default_bound(3) == 8.0);
  REQUIRE(qcube::bh_default_bound(5) == 32.0);
  REQUIRE_THROWS_AS(qcube::bh_default_bound(0), std::invalid_argument);
}

TEST_CASE("Coefficient side validates the degree", "[bh]") {
  PauliPolynomial p(2);
  p.set_coefficient(PauliIndex::from_string("XZ"), cplx{1.0, 0.0});
  REQUIRE_THROWS_AS(qcube::bh_lhs_quantum(p, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(qcube::bh_lhs_quantum(p, 0), std::invalid_argument);
  REQUIRE(qcube::bh_lhs_quantum(p, 2) == 1.0);

  BooleanPolynomial f(2);
  f.set_coefficient(IndexSet::of({0, 1}), cplx{1.0, 0.0});
  REQUIRE_THROWS_AS(qcube::bh_lhs_boolean(f, 1), std::invalid_argument);
  REQUIRE(qcube::bh_lhs_boolean(f, 2) == 1.0);

  REQUIRE(qcube::bh_lhs_quantum(PauliPolynomial(1), 1) == 0.0);
}

TEST_CASE("Three-axis witness attains ratio sqrt(3)", "[bh]") {
  PauliPolynomial p(1);
  for (const char* w : {"X", "Y", "Z"}) {
    p.set_coefficient(PauliIndex::from_string(w), cplx{1.0, 0.0});
  }
  const BhReport r = qcube::bh_ratio_quantum(p, 1);
  REQUIRE_THAT(r.lhs, Catch::Matchers::WithinAbs(3.0, 1e-12));
  REQUIRE_THAT(r.norm, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
  REQUIRE_THAT(r.ratio, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-9));
  REQUIRE_FALSE(r.norm_is_lower_bound);
}

TEST_CASE("Bilinear four-term witness attains ratio sqrt(2)", "[bh]") {
  // f = x1 y1 + x1 y2 + x2 y1 - x2 y2 on {-1,+1}^4 with y = (x3, x4).
  BooleanPolynomial f(4);
  f.set_coefficient(IndexSet::of({0, 2}), cplx{1.0, 0.0});
  f.set_coefficient(IndexSet::of({0, 3}), cplx{1.0, 0.0});
  f.set_coefficient(IndexSet::of({1, 2}), cplx{1.0, 0.0});
  f.set_coefficient(IndexSet::of({1, 3}), cplx{-1.0, 0.0});

  const BhReport r = qcube::bh_ratio_boolean(f, 2);
  REQUIRE_THAT(r.lhs, Catch::Matchers::WithinAbs(std::pow(4.0, 0.75), 1e-12));
  REQUIRE_THAT(r.norm, Catch::Matchers::WithinAbs(2.0, 1e-12));
  REQUIRE_THAT(r.ratio, Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-9));
}

TEST_CASE("Exhaustive sup norm matches direct enumeration", "[bh]") {
  qcube::Rng rng(51, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng.uniform_below(8);
    BooleanPolynomial f(m);
    const std::size_t terms = 1 + rng.uniform_below(10);
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> elems;
      for (std::size_t j = 0; j < m; ++j) {
        if (rng.uniform01() < 0.4) elems.push_back(static_cast<std::uint32_t>(j));
      }
      const bool complex_part = trial % 3 == 0;
      f.add_term(IndexSet::from_elements(std::move(elems)),
                 cplx{rng.gaussian(), complex_part ? rng.gaussian() : 0.0});
    }
    const qcube::SupNormResult sup = qcube::sup_norm_boolean(f);
    REQUIRE(sup.exhaustive);
    double direct = 0.0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
      direct = std::max(direct, std::abs(f.evaluate(SignVector::from_bits(m, bits))));
    }
    REQUIRE_THAT(sup.value, Catch::Matchers::WithinAbs(direct, 1e-11));
  }
}

TEST_CASE("Sampled sup norm is a lower bound on the exhaustive value", "[bh]") {
  qcube::Rng rng(52, 0);
  BooleanPolynomial f(8);
  for (int t = 0; t < 12; ++t) {
    std::vector<std::uint32_t> elems;
    for (std::size_t j = 0; j < 8; ++j) {
      if (rng.uniform01() < 0.3) elems.push_back(static_cast<std::uint32_t>(j));
    }
    f.add_term(IndexSet::from_elements(std::move(elems)), cplx{rng.gaussian(), 0.0});
  }
  const qcube::SupNormResult full = qcube::sup_norm_boolean(f);
  qcube::SupNormOptions opts;
  opts.exhaustive_limit = 4;
  opts.samples = 2000;
  opts.seed = 7;
  const qcube::SupNormResult sampled = qcube::sup_norm_boolean(f, opts);
  REQUIRE_FALSE(sampled.exhaustive);
  REQUIRE(sampled.value <= full.value + 1e-11);
  REQUIRE(sampled.value >= 0.5 * full.value);

  const BhReport r = qcube::bh_ratio_boolean(f, f.degree(), opts);
  REQUIRE(r.norm_is_lower_bound);
}

TEST_CASE("Lift chain brackets the coefficient sides", "[bh]") {
  qcube::Rng rng(53, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.uniform_below(4);
    const std::size_t d = 1 + rng.uniform_below(2);
    const PauliPolynomial p =
        qcube::random_observable(n, std::min(d, n), false, qcube::CoeffDist::Gaussian, rng);
    const BooleanPolynomial f = qcube::lift(p);
    const double lq = qcube::bh_lhs_quantum(p, std::min(d, n));
    const double lb = qcube::bh_lhs_boolean(f, std::min(d, n));
    const double factor = std::pow(3.0, static_cast<double>(std::min(d, n)));
    REQUIRE(lb <= lq + 1e-12);
    REQUIRE(lq <= factor * lb + 1e-10);
  }
}

TEST_CASE("Random ensembles respect the lifted constant", "[bh]") {
  qcube::Rng rng(54, 0);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= std::min<std::size_t>(2, n); ++d) {
      const double cap = std::pow(3.0, static_cast<double>(d)) * qcube::bh_default_bound(d);
      double worst = 0.0;
      for (int trial = 0; trial < 100; ++trial) {
        const qcube::CoeffDist dist =
            trial % 2 == 0 ? qcube::CoeffDist::PlusMinusOne : qcube::CoeffDist::Gaussian;
        const PauliPolynomial p = qcube::random_observable(n, d, false, dist, rng);
        if (p.is_zero()) continue;
        const BhReport r = qcube::bh_ratio_quantum(p, d);
        worst = std::max(worst, r.ratio);
      }
      REQUIRE(worst <= cap);
      REQUIRE(worst > 0.0);
    }
  }
}

TEST_CASE("Word families enumerate in lexicographic order", "[bh]") {
  const auto all1 = qcube::enumerate_words(1, 1, false);
  REQUIRE(all1.size() == 4);
  REQUIRE(all1[0].str() == "I");
  REQUIRE(all1[1].str() == "X");
  REQUIRE(all1[2].str() == "Y");
  REQUIRE(all1[3].str() == "Z");

  REQUIRE(qcube::enumerate_words(2, 1, false).size() == 7);
  REQUIRE(qcube::enumerate_words(2, 2, false).size() == 16);
  REQUIRE(qcube::enumerate_words(2, 1, true).size() == 6);
  REQUIRE(qcube::enumerate_words(3, 2, true).size() == 27);

  const auto words = qcube::enumerate_words(2, 1, false);
  for (std::size_t i = 1; i < words.size(); ++i) REQUIRE(words[i - 1] < words[i]);

  REQUIRE_THROWS_AS(qcube::enumerate_words(0, 1, false), std::invalid_argument);
  REQUIRE_THROWS_AS(qcube::enumerate_words(2, 3, true), std::invalid_argument);
  REQUIRE_THROWS_AS(qcube::enumerate_words(64, 8, false), std::invalid_argument);
}

TEST_CASE("Random observables are reproducible and sign-valued", "[bh]") {
  qcube::Rng rng1(55, 0);
  qcube::Rng rng2(55, 0);
  const PauliPolynomial a =
      qcube::random_observable(3, 2, false, qcube::CoeffDist::PlusMinusOne, rng1);
  const PauliPolynomial b =
      qcube::random_observable(3, 2, false, qcube::CoeffDist::PlusMinusOne, rng2);
  REQUIRE(a.terms() == b.terms());
  REQUIRE(a.term_count() == qcube::enumerate_words(3, 2, false).size());
  for (const auto& [s, c] : a.terms()) {
    REQUIRE(std::abs(std::abs(c.real()) - 1.0) == 0.0);
    REQUIRE(c.imag() == 0.0);
  }
  REQUIRE(a.is_hermitian());

  qcube::Rng rng3(56, 0);
  const PauliPolynomial h =
      qcube::random_observable(3, 2, true, qcube::CoeffDist::Gaussian, rng3);
  for (const auto& [s, c] : h.terms()) REQUIRE(s.weight() == 2);
}

TEST_CASE("Multilinear entries assemble block observables", "[bh]") {
  qcube::MultilinearEntry entry;
  entry.axes = {1, 3};
  entry.sites = {0, 1};
  entry.value = cplx{2.0, 0.0};
  const PauliPolynomial p = qcube::multilinear_observable({entry}, 2, 2);
  REQUIRE(p.n() == 4);
  REQUIRE(p.term_count() == 1);
  REQUIRE(p.coefficient(PauliIndex::from_string("XIIZ")) == cplx{2.0, 0.0});

  const BhReport r = qcube::multilinear_ratio({entry}, 2, 2);
  REQUIRE_THAT(r.norm, Catch::Matchers::WithinAbs(2.0, 1e-12));
  const double expected_lhs = std::pow(std::pow(2.0, 4.0 / 3.0), 3.0 / 4.0);
  REQUIRE_THAT(r.lhs, Catch::Matchers::WithinAbs(expected_lhs, 1e-12));

  qcube::MultilinearEntry bad = entry;
  bad.axes = {1};
  REQUIRE_THROWS_AS(qcube::multilinear_observable({bad}, 2, 2), std::invalid_argument);
  bad = entry;
  bad.axes = {1, 4};
  REQUIRE_THROWS_AS(qcube::multilinear_observable({bad}, 2, 2), std::invalid_argument);
  bad = entry;
  bad.sites = {0, 2};
  REQUIRE_THROWS_AS(qcube::multilinear_observable({bad}, 2, 2), std::invalid_argument);
}
