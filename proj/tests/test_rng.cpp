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

#include "qcube/rng.hpp"

using qcube::Rng;

TEST_CASE("Identical seed and stream reproduce the sequence", "[rng]") {
  Rng a(12345, 7);
  Rng b(12345, 7);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("Distinct streams of one seed differ", "[rng]") {
  Rng a(12345, 0);
  Rng b(12345, 1);
  int agree = 0;
  for (int i = 0; i < 64; ++i) agree += (a.next_u64() == b.next_u64());
  REQUIRE(agree == 0);
}

TEST_CASE("uniform01 stays in the half-open unit interval", "[rng]") {
  Rng rng(99, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("sign is balanced", "[rng]") {
  Rng rng(4, 2);
  long sum = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) sum += rng.sign();
  // Mean of `draws` fair signs has standard deviation sqrt(draws) ~ 316.
  REQUIRE(std::abs(sum) < 5 * 316);
}

TEST_CASE("gaussian has unit variance and zero mean", "[rng]") {
  Rng rng(7, 3);
  const int draws = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / draws;
  const double var = sum_sq / draws - mean * mean;
  REQUIRE(std::abs(mean) < 0.02);
  REQUIRE(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("uniform_below respects its bound and hits all residues", "[rng]") {
  Rng rng(11, 0);
  bool seen[10] = {};
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng.uniform_below(10);
    REQUIRE(v < 10);
    seen[v] = true;
  }
  for (bool s : seen) REQUIRE(s);
}
