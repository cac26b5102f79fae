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

#include <filesystem>
#include <string>
#include <vector>

#include "greenhcn/config.hpp"
#include "greenhcn/montecarlo.hpp"
#include "greenhcn/optimizer.hpp"

namespace greenhcn {

/// Shortest round-trip-safe decimal form; "nan" for NaN.
std::string format_number(double value);

/// Header: se,scheme,csi,pa,mean_energy_mJ,mean_t_star_ms,infeasible_frac,drops
std::string energy_csv(const std::vector<SweepRow>& rows);

/// Header: scheme,csi,pa,se,mean_t_star_ms,saturated
std::string duration_csv(const std::vector<DurationSeries>& series, double frame);

/// Header: scheme,csi,se,energy_tpa_mJ,energy_ipa_mJ,ratio_tpa_over_ipa
std::string pa_compare_csv(const std::vector<PaComparison>& comparisons);

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Self-contained SVG line chart. Non-finite points are skipped.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<ChartSeries>& series);

/// Writes energy_vs_se.csv, duration_vs_se.csv, pa_compare.csv and, when
/// requested, the matching .svg charts into `dir`. Returns the written paths.
std::vector<std::filesystem::path> write_sweep_outputs(const std::vector<SweepRow>& rows,
                                                       double frame,
                                                       const std::filesystem::path& dir,
                                                       bool svg);

/// One CSV record per solve. The CSI mode is not part of the record.
std::string solve_csv_header();
std::string solve_csv_row(const SolveResult& result, const Problem& problem, PaModel pa);

/// Multi-line human-readable description of a solve.
std::string solve_summary(const SolveResult& result, const Problem& problem);

}  // namespace greenhcn
