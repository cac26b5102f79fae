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

#include <cmath>
#include <cstddef>
#include <limits>

#include "greenhcn/errors.hpp"

namespace greenhcn {

struct LineSearchResult {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

/// Minimizes f over [lo, hi]: evaluates a uniform grid of `grid_points`
/// (endpoints included), then runs `refine_iters` golden-section steps on the
/// bracket around the best grid point. Non-finite values count as +inf.
/// The returned point is the best one ever evaluated.
template <class F>
LineSearchResult minimize_grid_golden(F&& f, double lo, double hi,
                                      std::size_t grid_points,
                                      std::size_t refine_iters) {
  if (grid_points < 2) throw ContractError("line search needs >= 2 grid points");
  if (!(lo <= hi)) throw ContractError("line search needs lo <= hi");

  auto eval = [&](double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  LineSearchResult best;
  if (lo == hi) {
    best = {lo, eval(lo)};
    return best;
  }

  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = (i + 1 == grid_points) ? hi : lo + step * static_cast<double>(i);
    const double v = eval(x);
    if (v < best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  if (refine_iters == 0 || !std::isfinite(best.value)) return best;

  double a = best_i == 0 ? lo : lo + step * static_cast<double>(best_i - 1);
  double b = best_i + 1 >= grid_points ? hi
                                       : lo + step * static_cast<double>(best_i + 1);
  if (b > hi) b = hi;

  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (std::size_t it = 0; it < refine_iters; ++it) {
    if (fc < best.value) best = {c, fc};
    if (fd < best.value) best = {d, fd};
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

}  // namespace greenhcn
