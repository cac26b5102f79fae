// Copyright 2026 The greenhcn Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "greenhcn/config.hpp"
#include "greenhcn/optimizer.hpp"
#include "greenhcn/oracle.hpp"

namespace greenhcn {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string first_failure;

  bool ok() const { return failed == 0 && passed > 0; }
  void record(bool pass, const std::string& detail);
};

struct VerifyOptions {
  std::size_t drops = 200;
  bool sabotage_split = false;  // oracle restricted to two or more active BSs
  double oracle_tolerance = 0.005;
  double approx_tolerance = 0.02;
  std::size_t convexity_grid = 1000;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string format() const;
};

/// Drop i of the verification set: K-nearest with K = 2 + (i mod 2),
/// seeded from the master seed, rejected layouts redrawn.
Drop verification_drop(const RunConfig& config, std::size_t i);

/// True when `values` has no interior local maximum: non-increasing up to
/// its minimum and non-decreasing after it, up to `rel_tol` of the scale.
bool is_unimodal(std::span<const double> values, double rel_tol = 1e-12);

/// energy_single_bs on `points` evenly spaced durations over
/// [duration_lower_bound, T].
std::vector<double> duration_profile(const Problem& problem, std::size_t m,
                                     std::size_t points, const SearchConfig& cfg = {});

struct OracleComparison {
  double proposed = 0.0;  // full frame energy
  double oracle = 0.0;
  std::size_t oracle_active = 0;
  double undercut = 0.0;  // (proposed - oracle) / proposed
};

/// Runs the precise proposed solver and the brute-force oracle on one
/// problem. Empty when the proposed solver finds the demand infeasible.
std::optional<OracleComparison> compare_with_oracle(const Problem& problem, CsiMode csi,
                                                    const OracleGrid& grid,
                                                    const SearchConfig& cfg);

/// Relative rate error of a result.
double rate_error(const SolveResult& result, const Problem& problem);

/// Runs the invariant suite on `options.drops` verification drops.
/// Throws ConfigError when drops == 0.
VerifyReport run_verification(const RunConfig& config, const VerifyOptions& options);

}  // namespace greenhcn
