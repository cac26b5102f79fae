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

#include "greenhcn/optimizer.hpp"

namespace greenhcn {

/// Exhaustive search used to check single-BS optimality numerically.
struct OracleGrid {
  std::size_t power_points = 40;     // log-spaced per BS, zero added
  double power_span_decades = 9.0;   // grid covers [P_max 10^-span, P_max]
  std::size_t duration_points = 200; // t = T k / n, k = 1..n
  std::size_t polish_rounds = 40;
  std::size_t min_active = 1;        // > 1 restricts to split allocations
};

struct OracleResult {
  Allocation allocation;
  EnergyReport energy;       // after polish
  double grid_energy = 0.0;  // best cell before polish, full frame energy
  std::size_t active_count = 0;
};

/// Evaluates every (power vector, duration) cell of the grid, keeps the
/// rate-feasible ones, then polishes the best cell by coordinate descent in
/// which one BS at a time absorbs the rate constraint, and finally searches
/// each single-BS face densely in t. At most 3 candidates.
/// Throws InfeasibleError(Demand) if no cell is feasible.
OracleResult brute_force_oracle(const Problem& problem, CsiMode csi,
                                const OracleGrid& grid = {});

}  // namespace greenhcn
