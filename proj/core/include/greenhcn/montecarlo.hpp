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
#include <vector>

#include "greenhcn/optimizer.hpp"
#include "greenhcn/scenario.hpp"

namespace greenhcn {

struct SweepSpec {
  std::vector<double> se_points;  // required r_dl / W, strictly increasing
  std::size_t drops_per_point = 1000;
  std::uint64_t master_seed = 1;
  std::vector<SchemeTag> schemes{SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox,
                                 SchemeTag::TraditionalMaxRss,
                                 SchemeTag::AllAccessUniform};
  std::vector<CsiMode> csi_modes{CsiMode::LongTerm, CsiMode::ShortTerm};
  std::vector<PaModel> pa_models{PaModel::Tpa, PaModel::Ipa};
  std::size_t threads = 0;        // 0: hardware concurrency
  std::size_t max_redraws = 10000;

  /// start, start + step, ... up to stop (inclusive within step/1e6).
  static std::vector<double> se_range(double start, double stop, double step);
  void validate() const;
};

/// Everything a drop needs besides its seed.
struct SweepInputs {
  Geometry geometry;
  DemandSpec demand;  // rate is replaced by se * W at each point
  DropConfig drop;
  BsProfile bs;
  UeProfile ue;
  SearchConfig search;
};

struct SweepRow {
  double se = 0.0;
  SchemeTag scheme = SchemeTag::ProposedPrecise;
  CsiMode csi = CsiMode::LongTerm;
  PaModel pa = PaModel::Tpa;
  double mean_energy = 0.0;          // J, over feasible drops
  double mean_t_star = 0.0;          // s, over feasible drops
  double mean_idle_floor = 0.0;      // J, all-idle frame energy
  double infeasible_fraction = 0.0;
  std::size_t drops_used = 0;        // feasible drops
  std::size_t drops_total = 0;
  std::size_t floor_clamped = 0;     // t* at the lower end of its range
  std::size_t frame_clamped = 0;     // t* == T
};

/// Outcome of one scheme on one drop at one se point.
struct DropOutcome {
  bool feasible = false;
  double energy = 0.0;    // J, full frame energy
  double t_star = 0.0;
  double t_lower = 0.0;
  double idle_floor = 0.0;
  bool at_floor = false;  // t* == t_lower
  bool at_frame = false;  // t* == T
  std::optional<std::size_t> chosen_bs;
};

/// Per-drop outcomes. Index with `index()`; layout is
/// [drop][se][scheme][csi][pa].
struct SweepOutcomes {
  std::size_t drops = 0, points = 0, schemes = 0, csi = 0, pa = 0;
  std::vector<DropOutcome> cells;
  std::vector<std::uint64_t> drop_seeds;  // accepted seed per drop

  std::size_t index(std::size_t drop, std::size_t point, std::size_t scheme,
                    std::size_t csi_i, std::size_t pa_i) const {
    return (((drop * points + point) * schemes + scheme) * csi + csi_i) * pa + pa_i;
  }
  const DropOutcome& at(std::size_t drop, std::size_t point, std::size_t scheme,
                        std::size_t csi_i, std::size_t pa_i) const {
    return cells[index(drop, point, scheme, csi_i, pa_i)];
  }
};

/// Drop d uses the first accepted seed derive_seed(master, d, attempt). The
/// same drop is shared by every se point, scheme, CSI mode and PA model.
std::uint64_t sweep_drop_seed(std::uint64_t master, std::size_t drop,
                              std::size_t attempt);

/// Builds drop `d` of a sweep, redrawing rejected layouts.
Drop sweep_drop(const SweepSpec& spec, const SweepInputs& inputs, std::size_t d,
                std::uint64_t* accepted_seed = nullptr);

SweepOutcomes evaluate_sweep(const SweepSpec& spec, const SweepInputs& inputs);

/// Means over feasible drops, reduced in drop-index order by pairwise
/// summation. Rows are sorted by (scheme, csi, pa, se).
std::vector<SweepRow> aggregate(const SweepSpec& spec, const SweepOutcomes& outcomes);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepInputs& inputs);

struct DurationSeries {
  SchemeTag scheme;
  CsiMode csi;
  PaModel pa;
  std::vector<double> se;
  std::vector<double> t_star;             // s
  std::optional<double> saturation_se;    // first se with mean t* == T
};

std::vector<DurationSeries> duration_curve(const std::vector<SweepRow>& rows,
                                           double frame);

struct PaComparison {
  SchemeTag scheme;
  CsiMode csi;
  std::vector<double> se;
  std::vector<double> energy_tpa;  // J
  std::vector<double> energy_ipa;  // J
  bool ipa_dominates = true;       // ipa <= tpa at every paired point
};

/// Pairs Tpa and Ipa rows of the same (scheme, csi, se).
std::vector<PaComparison> compare_pa_models(const std::vector<SweepRow>& rows);

/// Pairwise (cascade) summation.
double pairwise_sum(const double* values, std::size_t n);

}  // namespace greenhcn
