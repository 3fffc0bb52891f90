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

#include "qcube/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcube/bh.hpp"
#include "qcube/bohr.hpp"
#include "qcube/boolean.hpp"
#include "qcube/dense.hpp"
#include "qcube/learner.hpp"
#include "qcube/lift.hpp"
#include "qcube/pauli.hpp"
#include "qcube/rng.hpp"

namespace qcube {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

/// Strict typed access to manifest keys; leftovers are an error.
class KeyReader {
 public:
  KeyReader(const Manifest& m, std::string command) : m_(m), command_(std::move(command)) {}

  std::optional<std::string> maybe_string(const std::string& key) {
    used_.insert(key);
    const auto it = m_.values.find(key);
    if (it == m_.values.end()) return std::nullopt;
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& fallback) {
    return maybe_string(key).value_or(fallback);
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) {
    const auto raw = maybe_string(key);
    if (!raw) return fallback;
    return parse_u64(key, *raw);
  }

  std::optional<std::uint64_t> maybe_u64(const std::string& key) {
    const auto raw = maybe_string(key);
    if (!raw) return std::nullopt;
    return parse_u64(key, *raw);
  }

  double get_double(const std::string& key, double fallback) {
    const auto raw = maybe_string(key);
    if (!raw) return fallback;
    return parse_double(key, *raw);
  }

  std::optional<double> maybe_double(const std::string& key) {
    const auto raw = maybe_string(key);
    if (!raw) return std::nullopt;
    return parse_double(key, *raw);
  }

  bool get_flag(const std::string& key, bool fallback) {
    const auto raw = maybe_string(key);
    if (!raw) return fallback;
    if (*raw == "0") return false;
    if (*raw == "1") return true;
    throw std::invalid_argument(command_ + ": key '" + key + "' must be 0 or 1, got '" + *raw +
                                "'");
  }

  void finish() const {
    for (const auto& [key, value] : m_.values) {
      if (!used_.contains(key)) {
        throw std::invalid_argument(command_ + ": unknown manifest key '" + key + "'");
      }
    }
  }

 private:
  std::uint64_t parse_u64(const std::string& key, const std::string& raw) const {
    std::uint64_t value = 0;
    const char* begin = raw.data();
    const char* end = begin + raw.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw std::invalid_argument(command_ + ": key '" + key + "' expects an integer, got '" +
                                  raw + "'");
    }
    return value;
  }

  double parse_double(const std::string& key, const std::string& raw) const {
    double value = 0.0;
    const char* begin = raw.data();
    const char* end = begin + raw.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw std::invalid_argument(command_ + ": key '" + key + "' expects a number, got '" + raw +
                                  "'");
    }
    return value;
  }

  const Manifest& m_;
  std::string command_;
  std::set<std::string> used_;
};

CoeffDist parse_dist(const std::string& command, const std::string& raw) {
  if (raw == "signs") return CoeffDist::PlusMinusOne;
  if (raw == "gaussian") return CoeffDist::Gaussian;
  throw std::invalid_argument(command + ": dist must be 'signs' or 'gaussian', got '" + raw + "'");
}

FunctionClass parse_class(const std::string& command, const std::string& raw) {
  if (raw == "all") return FunctionClass::All;
  if (raw == "homogeneous") return FunctionClass::Homogeneous;
  if (raw == "exact") return FunctionClass::ExactDegree;
  if (raw == "upto") return FunctionClass::UpToDegree;
  throw std::invalid_argument(command +
                              ": class must be one of all, homogeneous, exact, upto; got '" +
                              raw + "'");
}

}  // namespace

Manifest parse_manifest_text(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": empty key");
    }
    if (!m.values.emplace(key, value).second) {
      throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'");
    }
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read manifest file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest_text(buffer.str());
}

int run_learn(const Manifest& m, bool planned_n, std::ostream& csv, std::ostream& summary) {
  KeyReader keys(m, "learn");
  LearnerConfig cfg;
  cfg.n = keys.get_u64("n", 0);
  cfg.d = keys.get_u64("d", 0);
  cfg.eps = keys.get_double("eps", 0.1);
  cfg.delta = keys.get_double("delta", 0.1);
  cfg.bh_bound = keys.get_double("bh_bound", cfg.d >= 1 ? bh_default_bound(cfg.d) : 2.0);
  const std::uint64_t trials = keys.get_u64("trials", 20);
  const std::uint64_t seed = keys.get_u64("seed", 1);
  const double noise_std = keys.get_double("noise_std", 0.0);
  cfg.n_override = keys.maybe_u64("n_override");
  cfg.b_override = keys.maybe_double("b_override");
  keys.finish();
  validate(cfg);
  if (planned_n) {
    csv << "planned_n=" << planned_sample_count(cfg) << "\n";
    return 0;
  }
  if (cfg.n > kDenseQubitLimit) {
    throw std::invalid_argument("learn: n must be at most " + std::to_string(kDenseQubitLimit) +
                                " so the ensemble can be normalized");
  }
  if (trials == 0) {
    throw std::invalid_argument("learn: trials must be positive");
  }
  csv << "trial,seed,N,b,survivors,err_l2sq,good_event\n";
  std::vector<double> errors;
  std::uint64_t good_count = 0;
  std::uint64_t survivor_violations = 0;
  std::uint64_t first_n = 0;
  double first_b = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng gen(seed, 2000 + t);
    PauliPolynomial truth =
        random_observable(cfg.n, cfg.d, false, CoeffDist::PlusMinusOne, gen);
    const double norm = operator_norm(truth);
    truth *= cplx{1.0 / norm, 0.0};
    const std::uint64_t trial_seed = seed + t;
    ExpectationOracle oracle(truth, noise_std, trial_seed);
    const LearnerReport report = learn(oracle, cfg, trial_seed);
    const double err = l2_distance_sq(report.reconstructed, truth);
    const bool good = good_event(truth, report);
    if (t == 0) {
      first_n = report.samples_used;
      first_b = report.threshold;
    }
    errors.push_back(err);
    if (good) {
      ++good_count;
      if (!report.survivor_within_bound) ++survivor_violations;
    }
    csv << t << "," << trial_seed << "," << report.samples_used << ","
        << format_double(report.threshold) << "," << report.survivors.size() << ","
        << format_double(err) << "," << (good ? 1 : 0) << "\n";
  }
  std::vector<double> sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  nlohmann::ordered_json j;
  j["command"] = "learn";
  j["n"] = cfg.n;
  j["d"] = cfg.d;
  j["eps"] = cfg.eps;
  j["delta"] = cfg.delta;
  j["bh_bound"] = cfg.bh_bound;
  j["trials"] = trials;
  j["samples_per_trial"] = first_n;
  j["threshold"] = first_b;
  try {
    j["planned_n"] = planned_sample_count(cfg);
  } catch (const std::exception&) {
    j["planned_n"] = nullptr;
  }
  j["good_event_rate"] = static_cast<double>(good_count) / static_cast<double>(trials);
  j["err_l2sq_max"] = sorted.back();
  j["err_l2sq_median"] = sorted[(k - 1) / 2];
  j["err_l2sq_q90"] = sorted[(9 * (k - 1)) / 10];
  j["survivor_violations"] = survivor_violations;
  summary << j.dump(2) << "\n";
  return survivor_violations == 0 ? 0 : 1;
}

int run_bh_sweep(const Manifest& m, std::ostream& out) {
  KeyReader keys(m, "bh-sweep");
  const std::uint64_t n_max = keys.get_u64("n_max", 3);
  const std::uint64_t d_max = keys.get_u64("d_max", 2);
  const std::uint64_t instances = keys.get_u64("instances", 100);
  const CoeffDist dist = parse_dist("bh-sweep", keys.get_string("dist", "signs"));
  const bool homogeneous = keys.get_flag("homogeneous", false);
  const std::uint64_t seed = keys.get_u64("seed", 1);
  keys.finish();
  if (n_max == 0 || n_max > kDenseQubitLimit) {
    throw std::invalid_argument("bh-sweep: n_max must lie in [1, " +
                                std::to_string(kDenseQubitLimit) + "]");
  }
  if (d_max == 0 || instances == 0) {
    throw std::invalid_argument("bh-sweep: d_max and instances must be positive");
  }
  out << "n,d,instances,max_ratio,mean_ratio,cap,ok\n";
  bool all_ok = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(d_max, n); ++d) {
      Rng rng(seed, 100 * n + d);
      double max_ratio = 0.0;
      double sum_ratio = 0.0;
      for (std::uint64_t i = 0; i < instances; ++i) {
        const PauliPolynomial a = random_observable(n, d, homogeneous, dist, rng);
        const BhReport r = bh_ratio_quantum(a, d);
        max_ratio = std::max(max_ratio, r.ratio);
        sum_ratio += r.ratio;
      }
      const double cap = pow3(d) * bh_default_bound(d);
      const bool ok = max_ratio <= cap + 1e-9;
      all_ok = all_ok && ok;
      out << n << "," << d << "," << instances << "," << format_double(max_ratio) << ","
          << format_double(sum_ratio / static_cast<double>(instances)) << ","
          << format_double(cap) << "," << (ok ? 1 : 0) << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int run_lift_verify(const Manifest& m, std::ostream& out) {
  KeyReader keys(m, "lift-verify");
  const std::uint64_t n = keys.get_u64("n", 2);
  const std::uint64_t d = keys.get_u64("d", 2);
  const std::uint64_t instances = keys.get_u64("instances", 50);
  const std::uint64_t points = keys.get_u64("points", 64);
  const std::uint64_t seed = keys.get_u64("seed", 1);
  const bool corrupt = keys.get_flag("corrupt", false);
  keys.finish();
  if (n == 0 || n > kDenseQubitLimit) {
    throw std::invalid_argument("lift-verify: n must lie in [1, " +
                                std::to_string(kDenseQubitLimit) + "]");
  }
  if (d == 0 || d > n) {
    throw std::invalid_argument("lift-verify: d must lie in [1, n]");
  }
  if (instances == 0 || points == 0) {
    throw std::invalid_argument("lift-verify: instances and points must be positive");
  }
  constexpr double kTol = 1e-12;
  out << "instance,points,max_dev,ok\n";
  bool all_ok = true;
  for (std::uint64_t i = 0; i < instances; ++i) {
    Rng rng(seed, 3000 + i);
    const CoeffDist dist = (i % 2) ? CoeffDist::Gaussian : CoeffDist::PlusMinusOne;
    const PauliPolynomial a = random_observable(n, d, false, dist, rng);
    BooleanPolynomial f = lift(a);
    if (corrupt && i == 0) {
      // Damage one lifted coefficient; the routes must now disagree.
      f.add_term(IndexSet::of({0}), cplx{0.37, 0.0});
    }
    const DenseMatrix dense = to_dense(a);
    const double dim = static_cast<double>(dense.rows());
    double max_dev = 0.0;
    bool reported = false;
    for (std::uint64_t p = 0; p < points; ++p) {
      const SignVector eps = SignVector::random(3 * n, rng);
      const cplx sparse = expectation(a, eps);
      const cplx cube = f.evaluate(eps);
      const cplx trace = (dense * product_state(eps)).trace();
      const double dev = std::max(std::abs(sparse - cube), std::abs(sparse - trace));
      max_dev = std::max(max_dev, dev);
      if (dev > kTol && !reported) {
        out << "mismatch instance=" << i << " eps=" << eps.str() << " dev=" << format_double(dev)
            << "\n";
        reported = true;
      }
    }
    (void)dim;
    const bool ok = max_dev <= kTol;
    all_ok = all_ok && ok;
    out << i << "," << points << "," << format_double(max_dev) << "," << (ok ? 1 : 0) << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_bohr(const Manifest& m, std::ostream& out) {
  KeyReader keys(m, "bohr");
  const std::string class_name = keys.get_string("class", "all");
  const FunctionClass cls = parse_class("bohr", class_name);
  const std::uint64_t n = keys.get_u64("n", 2);
  const std::uint64_t d = keys.get_u64("d", 2);
  SearchOptions opts;
  opts.ensemble = keys.get_u64("ensemble", 200);
  opts.seed = keys.get_u64("seed", 1);
  keys.finish();
  const SearchResult res = class_radius_search(cls, n, d, opts);
  const double reference = reference_min_radius(n);
  const bool ok = res.min_radius >= reference - 1e-9 && res.max_residual <= 1e-10;
  out << "class,n,d,evaluated,enumerated,min_radius,max_residual,reference,ok\n";
  out << class_name << "," << n << "," << d << "," << res.evaluated << ","
      << (res.enumerated_sign_functions ? 1 : 0) << "," << format_double(res.min_radius) << ","
      << format_double(res.max_residual) << "," << format_double(reference) << ","
      << (ok ? 1 : 0) << "\n";
  return ok ? 0 : 1;
}

int run_gen(const Manifest& m, std::ostream& out) {
  KeyReader keys(m, "gen");
  const std::uint64_t n = keys.get_u64("n", 2);
  const std::uint64_t d = keys.get_u64("d", 2);
  const bool homogeneous = keys.get_flag("homogeneous", false);
  const CoeffDist dist = parse_dist("gen", keys.get_string("dist", "signs"));
  const std::uint64_t seed = keys.get_u64("seed", 1);
  keys.finish();
  if (n == 0 || d == 0 || d > n) {
    throw std::invalid_argument("gen: need 1 <= d <= n");
  }
  Rng rng(seed, 0);
  const PauliPolynomial a = random_observable(n, d, homogeneous, dist, rng);
  out << a.to_text();
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"low-degree qubit observables on the Boolean cube"};
  app.require_subcommand(1);

  struct CommonArgs {
    std::string manifest;
    std::string out_path;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* out_opt = nullptr;
  };
  std::map<std::string, CommonArgs> args;
  auto add_common = [&](CLI::App* cmd) {
    CommonArgs& a = args[cmd->get_name()];
    cmd->add_option("--manifest", a.manifest, "manifest file of key=value lines")->required();
    a.out_opt = cmd->add_option("--out", a.out_path, "write output to this file");
    a.seed_opt = cmd->add_option("--seed", a.seed, "override the manifest seed");
  };

  CLI::App* learn_cmd = app.add_subcommand("learn", "sampling-based coefficient learning");
  add_common(learn_cmd);
  bool planned_n = false;
  learn_cmd->add_flag("--planned-n", planned_n, "print only the planned sample budget");
  CLI::App* sweep_cmd =
      app.add_subcommand("bh-sweep", "coefficient-inequality ratios over random ensembles");
  add_common(sweep_cmd);
  CLI::App* lift_cmd =
      app.add_subcommand("lift-verify", "cross-check the three evaluation routes");
  add_common(lift_cmd);
  CLI::App* bohr_cmd = app.add_subcommand("bohr", "worst-case radius search over a class");
  add_common(bohr_cmd);
  CLI::App* gen_cmd = app.add_subcommand("gen", "write a seeded random observable");
  add_common(gen_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CLI::App* active = app.get_subcommands().front();
  const CommonArgs& common = args[active->get_name()];
  try {
    Manifest m = load_manifest(common.manifest);
    if (common.seed_opt->count() > 0) {
      m.values.insert_or_assign("seed", std::to_string(common.seed));
    }
    std::ofstream out_file;
    const bool to_file = common.out_opt->count() > 0;
    if (to_file) {
      out_file.open(common.out_path);
      if (!out_file) {
        throw std::runtime_error("cannot open output file '" + common.out_path + "'");
      }
    }
    std::ostream& out = to_file ? static_cast<std::ostream&>(out_file) : std::cout;
    if (active == learn_cmd) {
      std::ofstream summary_file;
      if (to_file) {
        summary_file.open(common.out_path + ".summary.json");
        if (!summary_file) {
          throw std::runtime_error("cannot open summary file '" + common.out_path +
                                   ".summary.json'");
        }
      }
      std::ostream& summary = to_file ? static_cast<std::ostream&>(summary_file) : std::cout;
      return run_learn(m, planned_n, out, summary);
    }
    if (active == sweep_cmd) return run_bh_sweep(m, out);
    if (active == lift_cmd) return run_lift_verify(m, out);
    if (active == bohr_cmd) return run_bohr(m, out);
    return run_gen(m, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcube
