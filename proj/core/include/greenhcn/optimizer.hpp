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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "greenhcn/power_model.hpp"
#include "greenhcn/scenario.hpp"

namespace greenhcn {

enum class SchemeTag {
  ProposedPrecise,
  ProposedApprox,
  TraditionalMaxRss,
  AllAccessUniform,
  OracleBruteForce,
};

std::string_view to_string(SchemeTag tag);
std::string_view to_string(CsiMode mode);
std::string_view to_string(PaModel model);

/// How the traditional scheme ranks received signal strength.
enum class RssWeighting {
  ReferencePower,  // argmax |h|^2 (equal reference power)
  MaxPower,        // argmax P_max |h|^2
};

struct SearchConfig {
  std::size_t t_grid_points = 2048;
  std::size_t refine_iters = 60;
  double rate_tol_rel = 1e-9;
  double energy_tie_tol_rel = 1e-12;
  std::optional<double> t_floor;  // s; raises the t_min lower bound
  RssWeighting rss_weighting = RssWeighting::ReferencePower;

  void validate() const;
};

/// The candidate cluster of one drop, as seen by every solver. channels and
/// profiles are aligned with Drop::candidates.
struct Problem {
  DemandSpec demand;
  std::vector<ChannelState> channels;
  std::vector<BsProfile> profiles;
  UeProfile ue;
  PaModel pa = PaModel::Tpa;

  std::size_t size() const { return channels.size(); }
  void validate() const;
};

/// Homogeneous cluster: every candidate uses `profile`.
Problem make_problem(const Drop& drop, const BsProfile& profile,
                     const UeProfile& ue, PaModel pa);

struct SolveResult {
  std::optional<std::size_t> chosen_bs;  // empty when several BSs transmit
  double power = 0.0;                    // W on each transmitting BS
  double t_star = 0.0;                   // s
  double t_lower = 0.0;                  // s, lower end of the duration range
  Allocation allocation;
  EnergyReport energy;                   // full frame energy
  SchemeTag scheme = SchemeTag::ProposedPrecise;
  CsiMode csi = CsiMode::LongTerm;
};

/// Rate actually delivered by a result under its CSI mode.
double achieved_rate(const SolveResult& result, const Problem& problem);

/// Single-BS power that meets r_dl exactly in duration t:
/// ((I_out + P_N) / |h|^2) (2^((T/W)(r/t)) - 1).
double power_for_duration(const ChannelState& channel, double t,
                          const DemandSpec& demand);

/// Shortest duration whose single-BS power stays within P_max.
/// Throws InfeasibleError(Demand) when that exceeds T.
double t_min_feasible(const ChannelState& channel, const DemandSpec& demand,
                      const BsProfile& profile);

/// Lower end of the duration search for BS m: t_min_feasible nudged up until
/// the required power is representably <= P_max, then raised to the
/// configured floor.
double duration_lower_bound(const Problem& problem, std::size_t m,
                            const SearchConfig& cfg = {});

/// Single-BS transmit-duration objective (idle constants removed) for BS m.
double energy_single_bs(const Problem& problem, std::size_t m, double t);

struct DurationSolution {
  double t_star = 0.0;
  double energy = 0.0;  // energy_single_bs at t_star
};

/// Grid plus golden-section minimization of energy_single_bs over
/// [duration_lower_bound, T].
DurationSolution solve_duration_precise(const Problem& problem, std::size_t m,
                                        const SearchConfig& cfg = {});

/// Closed-form duration for the high-power regime:
///   t_min                if r T ln2 / (2W) < t_min
///   T                    if r / W > 2 / ln2
///   r T ln2 / (2W)       otherwise
double solve_duration_approx(const Problem& problem, std::size_t m,
                             const SearchConfig& cfg = {});

/// Precise proposed scheme: best single BS by per-BS optimized energy.
SolveResult select_bs_precise(const Problem& problem, CsiMode csi,
                              const SearchConfig& cfg = {});

/// argmax eta_max |h| / sqrt(P_max), lowest index on ties.
std::size_t select_bs_approx(const Problem& problem);

/// Approximate proposed scheme: select_bs_approx + solve_duration_approx.
SolveResult solve_proposed_approx(const Problem& problem, CsiMode csi,
                                  const SearchConfig& cfg = {});

/// Strongest received signal BS, then optimized duration.
SolveResult baseline_max_rss(const Problem& problem, CsiMode csi,
                             const SearchConfig& cfg = {});

/// Uniform power from every candidate, duration optimized. Power is capped
/// by the smallest P_max of the cluster.
SolveResult baseline_all_access(const Problem& problem, CsiMode csi,
                                const SearchConfig& cfg = {});

/// Uniform power that makes the cluster meet r_dl in duration t.
double all_access_power(const Problem& problem, CsiMode csi, double t);

/// Dispatch by scheme tag. OracleBruteForce is not accepted here.
SolveResult solve(SchemeTag scheme, const Problem& problem, CsiMode csi,
                  const SearchConfig& cfg = {});

}  // namespace greenhcn
