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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"
#include "qcube/cli.hpp"

namespace {

using Catch::Matchers::ContainsSubstring;
using qcube::Manifest;

Manifest manifest_of(const std::string& text) { return qcube::parse_manifest_text(text); }

std::size_t count_lines(const std::string& s) {
  std::size_t lines = 0;
  for (char c : s) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("manifest parsing handles comments, blanks, and whitespace", "[cli]") {
  const Manifest m = manifest_of(
      "# full-line comment\n"
      "\n"
      "  n = 3   # trailing comment\n"
      "d=2\n"
      "\tlabel =  spaced value \n");
  REQUIRE(m.values.size() == 3);
  REQUIRE(m.values.at("n") == "3");
  REQUIRE(m.values.at("d") == "2");
  REQUIRE(m.values.at("label") == "spaced value");
}

TEST_CASE("manifest parsing rejects malformed input", "[cli]") {
  REQUIRE_THROWS_MATCHES(manifest_of("n = 1\nnot a pair\n"), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("line 2")));
  REQUIRE_THROWS_MATCHES(manifest_of("= 3\n"), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("empty key")));
  REQUIRE_THROWS_MATCHES(manifest_of("n = 1\nn = 2\n"), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("duplicate key 'n'")));
}

TEST_CASE("manifest loading requires a readable file", "[cli]") {
  REQUIRE_THROWS_AS(qcube::load_manifest("/nonexistent/qcube-manifest"), std::runtime_error);
}

TEST_CASE("commands reject unknown manifest keys", "[cli]") {
  std::ostringstream out;
  std::ostringstream summary;
  REQUIRE_THROWS_MATCHES(
      qcube::run_learn(manifest_of("n=1\nd=1\nbogus=7\n"), false, out, summary),
      std::invalid_argument,
      Catch::Matchers::MessageMatches(ContainsSubstring("learn") &&
                                      ContainsSubstring("bogus")));
  REQUIRE_THROWS_MATCHES(
      qcube::run_bh_sweep(manifest_of("mystery=1\n"), out), std::invalid_argument,
      Catch::Matchers::MessageMatches(ContainsSubstring("bh-sweep") &&
                                      ContainsSubstring("mystery")));
  REQUIRE_THROWS_MATCHES(
      qcube::run_bohr(manifest_of("radius=2\n"), out), std::invalid_argument,
      Catch::Matchers::MessageMatches(ContainsSubstring("bohr") && ContainsSubstring("radius")));
  REQUIRE_THROWS_MATCHES(
      qcube::run_gen(manifest_of("shape=tall\n"), out), std::invalid_argument,
      Catch::Matchers::MessageMatches(ContainsSubstring("gen") && ContainsSubstring("shape")));
  REQUIRE_THROWS_MATCHES(
      qcube::run_lift_verify(manifest_of("extra=1\n"), out), std::invalid_argument,
      Catch::Matchers::MessageMatches(ContainsSubstring("lift-verify") &&
                                      ContainsSubstring("extra")));
}

TEST_CASE("commands validate their manifest values", "[cli]") {
  std::ostringstream out;
  std::ostringstream summary;
  REQUIRE_THROWS_AS(qcube::run_learn(manifest_of("n=0\nd=1\n"), false, out, summary),
                    std::invalid_argument);
  REQUIRE_THROWS_MATCHES(
      qcube::run_learn(manifest_of("n=11\nd=1\nn_override=10\n"), false, out, summary),
      std::invalid_argument, Catch::Matchers::MessageMatches(ContainsSubstring("at most")));
  REQUIRE_THROWS_AS(
      qcube::run_learn(manifest_of("n=1\nd=1\ntrials=0\nn_override=10\n"), false, out, summary),
      std::invalid_argument);
  REQUIRE_THROWS_MATCHES(qcube::run_bh_sweep(manifest_of("dist=bogus\n"), out),
                         std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("dist")));
  REQUIRE_THROWS_MATCHES(qcube::run_bh_sweep(manifest_of("homogeneous=yes\n"), out),
                         std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("0 or 1")));
  REQUIRE_THROWS_MATCHES(qcube::run_bohr(manifest_of("class=huge\n"), out),
                         std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("class")));
  REQUIRE_THROWS_AS(qcube::run_gen(manifest_of("n=1\nd=2\n"), out), std::invalid_argument);
  REQUIRE_THROWS_MATCHES(qcube::run_gen(manifest_of("n=two\nd=1\n"), out), std::invalid_argument,
                         Catch::Matchers::MessageMatches(ContainsSubstring("integer")));
}

TEST_CASE("learner command emits a csv row per trial and a summary", "[cli]") {
  const Manifest m = manifest_of(
      "n = 1\n"
      "d = 1\n"
      "trials = 2\n"
      "seed = 3\n"
      "n_override = 2000\n"
      "b_override = 0.1\n");
  std::ostringstream csv;
  std::ostringstream summary;
  const int rc = qcube::run_learn(m, false, csv, summary);
  REQUIRE(rc == 0);
  const std::string text = csv.str();
  REQUIRE(text.rfind("trial,seed,N,b,survivors,err_l2sq,good_event\n", 0) == 0);
  REQUIRE(count_lines(text) == 3);
  REQUIRE_THAT(text, ContainsSubstring("\n0,3,2000,"));
  REQUIRE_THAT(text, ContainsSubstring("\n1,4,2000,"));
  const nlohmann::json j = nlohmann::json::parse(summary.str());
  REQUIRE(j.at("command") == "learn");
  REQUIRE(j.at("trials") == 2);
  REQUIRE(j.at("samples_per_trial") == 2000);
  REQUIRE(j.at("planned_n") == 958);
  REQUIRE(j.at("survivor_violations") == 0);
  REQUIRE(j.at("good_event_rate").is_number());
  REQUIRE(j.at("err_l2sq_max").is_number());
}

TEST_CASE("planned budget mode prints a single line", "[cli]") {
  const Manifest m = manifest_of(
      "n = 1\n"
      "d = 1\n"
      "eps = 0.1\n"
      "delta = 0.1\n"
      "bh_bound = 1\n"
      "b_override = 0.1\n");
  std::ostringstream out;
  std::ostringstream summary;
  const int rc = qcube::run_learn(m, true, out, summary);
  REQUIRE(rc == 0);
  REQUIRE(out.str() == "planned_n=958\n");
  REQUIRE(summary.str().empty());
}

TEST_CASE("repeated runs produce identical bytes", "[cli]") {
  const Manifest learn_m = manifest_of("n=1\nd=1\ntrials=2\nseed=5\nn_override=500\nb_override=0.1\n");
  const Manifest sweep_m = manifest_of("n_max=2\nd_max=1\ninstances=5\nseed=4\n");
  const Manifest lift_m = manifest_of("n=1\nd=1\ninstances=3\npoints=8\nseed=6\n");
  const Manifest bohr_m = manifest_of("class=upto\nn=2\nd=1\nensemble=12\nseed=7\n");
  const Manifest gen_m = manifest_of("n=2\nd=2\nseed=8\ndist=gaussian\n");

  std::ostringstream a1, a2, s1, s2;
  REQUIRE(qcube::run_learn(learn_m, false, a1, s1) == qcube::run_learn(learn_m, false, a2, s2));
  REQUIRE(a1.str() == a2.str());
  REQUIRE(s1.str() == s2.str());
  REQUIRE_FALSE(a1.str().empty());

  std::ostringstream b1, b2;
  REQUIRE(qcube::run_bh_sweep(sweep_m, b1) == qcube::run_bh_sweep(sweep_m, b2));
  REQUIRE(b1.str() == b2.str());

  std::ostringstream c1, c2;
  REQUIRE(qcube::run_lift_verify(lift_m, c1) == qcube::run_lift_verify(lift_m, c2));
  REQUIRE(c1.str() == c2.str());

  std::ostringstream d1, d2;
  REQUIRE(qcube::run_bohr(bohr_m, d1) == qcube::run_bohr(bohr_m, d2));
  REQUIRE(d1.str() == d2.str());

  std::ostringstream e1, e2;
  REQUIRE(qcube::run_gen(gen_m, e1) == qcube::run_gen(gen_m, e2));
  REQUIRE(e1.str() == e2.str());
}

TEST_CASE("lift verification cross-checks three evaluation routes", "[cli]") {
  const Manifest clean = manifest_of("n=2\nd=2\ninstances=4\npoints=16\nseed=2\n");
  std::ostringstream out;
  REQUIRE(qcube::run_lift_verify(clean, out) == 0);
  const std::string text = out.str();
  REQUIRE(text.rfind("instance,points,max_dev,ok\n", 0) == 0);
  REQUIRE(count_lines(text) == 5);
  REQUIRE(text.find("mismatch") == std::string::npos);

  const Manifest bad = manifest_of("n=2\nd=2\ninstances=4\npoints=16\nseed=2\ncorrupt=1\n");
  std::ostringstream bad_out;
  REQUIRE(qcube::run_lift_verify(bad, bad_out) == 1);
  const std::string bad_text = bad_out.str();
  REQUIRE_THAT(bad_text, ContainsSubstring("mismatch instance=0 eps="));
  REQUIRE_THAT(bad_text, ContainsSubstring("0,16,"));
  // Only the corrupted instance fails; the others still agree.
  REQUIRE_THAT(bad_text, ContainsSubstring(",1\n"));
}

TEST_CASE("sweep and radius and generator commands succeed end to end", "[cli]") {
  std::ostringstream sweep;
  REQUIRE(qcube::run_bh_sweep(manifest_of("n_max=2\nd_max=2\ninstances=8\nseed=3\n"), sweep) == 0);
  const std::string sweep_text = sweep.str();
  REQUIRE(sweep_text.rfind("n,d,instances,max_ratio,mean_ratio,cap,ok\n", 0) == 0);
  // Cells: (1,1), (2,1), (2,2).
  REQUIRE(count_lines(sweep_text) == 4);

  std::ostringstream bohr;
  REQUIRE(qcube::run_bohr(manifest_of("class=all\nn=2\nd=2\nensemble=20\nseed=11\n"), bohr) == 0);
  REQUIRE_THAT(bohr.str(), ContainsSubstring("class,n,d,evaluated,enumerated"));
  REQUIRE_THAT(bohr.str(), ContainsSubstring("all,2,2,"));

  std::ostringstream gen;
  REQUIRE(qcube::run_gen(manifest_of("n=2\nd=1\nseed=9\n"), gen) == 0);
  const std::string gen_text = gen.str();
  REQUIRE_FALSE(gen_text.empty());
  REQUIRE(gen_text.back() == '\n');
  REQUIRE(gen_text.rfind("II ", 0) == 0);
}

TEST_CASE("top-level driver wires manifests, output files, and seed overrides", "[cli]") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path mf_path = dir / "qcube_cli_test_gen.mf";
  const fs::path out_path = dir / "qcube_cli_test_gen.out";
  {
    std::ofstream mf(mf_path);
    REQUIRE(mf.good());
    mf << "n = 2\nd = 2\nseed = 1\n";
  }
  std::vector<std::string> arg_strings = {"qcube",       "gen",
                                          "--manifest",  mf_path.string(),
                                          "--out",       out_path.string(),
                                          "--seed",      "42"};
  std::vector<char*> argv;
  for (auto& s : arg_strings) argv.push_back(s.data());
  const int rc = qcube::run_cli(static_cast<int>(argv.size()), argv.data());
  REQUIRE(rc == 0);

  std::ifstream in(out_path);
  REQUIRE(in.good());
  std::ostringstream file_content;
  file_content << in.rdbuf();

  std::ostringstream direct;
  REQUIRE(qcube::run_gen(manifest_of("n=2\nd=2\nseed=42\n"), direct) == 0);
  REQUIRE(file_content.str() == direct.str());

  std::ostringstream unseeded;
  REQUIRE(qcube::run_gen(manifest_of("n=2\nd=2\nseed=1\n"), unseeded) == 0);
  REQUIRE(file_content.str() != unseeded.str());

  std::error_code ec;
  fs::remove(mf_path, ec);
  fs::remove(out_path, ec);
}

TEST_CASE("top-level driver reports runner failures on stderr with exit code two", "[cli]") {
  namespace fs = std::filesystem;
  const fs::path mf_path = fs::temp_directory_path() / "qcube_cli_test_bad.mf";
  {
    std::ofstream mf(mf_path);
    REQUIRE(mf.good());
    mf << "n = 2\nd = 2\nwrong_key = 1\n";
  }
  std::vector<std::string> arg_strings = {"qcube", "gen", "--manifest", mf_path.string()};
  std::vector<char*> argv;
  for (auto& s : arg_strings) argv.push_back(s.data());
  REQUIRE(qcube::run_cli(static_cast<int>(argv.size()), argv.data()) == 2);
  std::error_code ec;
  fs::remove(mf_path, ec);
}
