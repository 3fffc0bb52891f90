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
 * Command layer: seeded, fully reproducible experiment drivers behind a
 * small manifest format. A manifest is a flat text file of `key=value`
 * lines ('#' starts a comment); every command checks its keys strictly
 * and rejects ones it does not understand. All floating-point output is
 * printed with 17 significant digits, so repeated runs are byte
 * identical. Runners return the process exit code: 0 when the run's own
 * checks hold, 1 when a check fails, and errors are thrown.
 */

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace qcube {

struct Manifest {
  std::map<std::string, std::string> values;
};

/// Parses `key=value` lines; throws std::invalid_argument on a malformed
/// line or a duplicate key.
Manifest parse_manifest_text(const std::string& text);

/// Reads and parses a manifest file; throws std::runtime_error when the
/// file cannot be read.
Manifest load_manifest(const std::string& path);

/**
 * Learning experiment over a seeded ensemble of sign-coefficient
 * observables scaled to unit operator norm. Writes one CSV row per
 * trial to `csv` and a JSON summary to `summary`. With `planned_n` set,
 * prints only the planned sample budget. Keys: n, d, eps, delta,
 * bh_bound, trials, seed, noise_std, n_override, b_override.
 */
int run_learn(const Manifest& m, bool planned_n, std::ostream& csv, std::ostream& summary);

/// Coefficient-inequality sweep over (n, d) cells of random observables.
/// Keys: n_max, d_max, instances, dist, homogeneous, seed.
int run_bh_sweep(const Manifest& m, std::ostream& out);

/**
 * Cross-checks the three evaluation routes (sparse expectation, lifted
 * cube polynomial, dense trace against the product state) at random
 * sign vectors, printing the worst deviation per instance. With
 * corrupt=1 the first lift is deliberately damaged and the run must
 * fail, naming the first sign vector that exposes it. Keys: n, d,
 * instances, points, seed, corrupt.
 */
int run_lift_verify(const Manifest& m, std::ostream& out);

/// Worst-radius search over a function class.
/// Keys: class, n, d, ensemble, seed.
int run_bohr(const Manifest& m, std::ostream& out);

/// Writes a seeded random observable in polynomial text form.
/// Keys: n, d, homogeneous, dist, seed.
int run_gen(const Manifest& m, std::ostream& out);

/// Full argument-parsing entry point used by the binary.
int run_cli(int argc, char** argv);

}  // namespace qcube
