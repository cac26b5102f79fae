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

#include "greenhcn/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "greenhcn/errors.hpp"
#include "greenhcn/line_search.hpp"

namespace greenhcn {

std::string_view to_string(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::ProposedPrecise: return "proposed";
    case SchemeTag::ProposedApprox: return "approx";
    case SchemeTag::TraditionalMaxRss: return "traditional";
    case SchemeTag::AllAccessUniform: return "all-access";
    case SchemeTag::OracleBruteForce: return "oracle";
  }
  return "?";
}

std::string_view to_string(CsiMode mode) {
  return mode == CsiMode::LongTerm ? "long" : "short";
}

std::string_view to_string(PaModel model) {
  return model == PaModel::Tpa ? "tpa" : "ipa";
}

void SearchConfig::validate() const {
  if (t_grid_points < 2) throw ContractError("search.t_grid_points must be >= 2");
  if (!(rate_tol_rel > 0.0)) throw ContractError("search.rate_tol_rel must be > 0");
  if (!(energy_tie_tol_rel >= 0.0)) {
    throw ContractError("search.energy_tie_tol_rel must be >= 0");
  }
  if (t_floor && !(*t_floor >= 0.0)) throw ContractError("search.t_floor must be >= 0");
}

void Problem::validate() const {
  demand.validate();
  ue.validate();
  if (channels.empty()) throw ContractError("empty candidate set");
  if (channels.size() != profiles.size()) {
    throw ContractError("channels/profiles length mismatch");
  }
  for (const auto& p : profiles) p.validate();
}

Problem make_problem(const Drop& drop, const BsProfile& profile,
                     const UeProfile& ue, PaModel pa) {
  Problem problem;
  problem.demand = drop.demand;
  problem.channels = drop.channels;
  problem.profiles.assign(drop.channels.size(), profile);
  problem.ue = ue;
  problem.pa = pa;
  return problem;
}

double achieved_rate(const SolveResult& result, const Problem& problem) {
  const double s = received_signal_power(result.allocation.powers,
                                         problem.channels, result.csi);
  return achievable_rate(result.t_star, problem.demand, s);
}

namespace {

// Power whose received signal through aggregate gain `gain` meets r_dl in t.
double power_for_gain(double gain, double t, const DemandSpec& demand) {
  if (!(t > 0.0)) throw DomainError("transmit duration must be > 0");
  if (!(gain > 0.0)) {
    throw InfeasibleError(Infeasibility::Channel, "zero channel gain");
  }
  const double exponent = (demand.frame / demand.bandwidth) * (demand.rate / t);
  const double p = demand.noise_plus_interference() / gain *
                   std::expm1(exponent * std::numbers::ln2);
  if (!std::isfinite(p)) {
    throw InfeasibleError(Infeasibility::Duration,
                          "required power overflows at t = " + std::to_string(t));
  }
  return p;
}

// Duration at which the power through `gain` reaches `cap`, nudged upward
// until power_for_gain(t) <= cap holds in floating point.
double lower_bound_for_gain(double gain, double cap, const DemandSpec& demand) {
  if (!(gain > 0.0)) {
    throw InfeasibleError(Infeasibility::Channel, "zero channel gain");
  }
  const double bits_per_hz = demand.frame * demand.rate / demand.bandwidth;
  const double full_power_se =
      std::log1p(cap * gain / demand.noise_plus_interference()) / std::numbers::ln2;
  double t = bits_per_hz / full_power_se;
  if (!(t <= demand.frame)) {
    throw InfeasibleError(Infeasibility::Demand,
                          "rate unreachable: t_min = " + std::to_string(t) +
                              " s exceeds T");
  }
  for (int i = 0; i < 64 && power_for_gain(gain, t, demand) > cap; ++i) {
    t = std::nextafter(t, std::numeric_limits<double>::infinity());
  }
  if (t > demand.frame || power_for_gain(gain, t, demand) > cap) {
    throw InfeasibleError(Infeasibility::Demand, "rate unreachable within T");
  }
  return t;
}

void check_index(const Problem& problem, std::size_t m) {
  if (m >= problem.size()) throw ContractError("BS index out of range");
}

SolveResult single_bs_result(const Problem& problem, std::size_t m, double t,
                             double t_lower, SchemeTag scheme, CsiMode csi) {
  SolveResult r;
  r.chosen_bs = m;
  r.t_lower = t_lower;
  r.power = power_for_duration(problem.channels[m], t, problem.demand);
  r.t_star = t;
  r.allocation.powers.assign(problem.size(), 0.0);
  r.allocation.powers[m] = r.power;
  r.allocation.duration = t;
  r.energy = frame_energy(r.allocation, problem.demand, problem.profiles,
                          problem.ue, problem.pa);
  r.scheme = scheme;
  r.csi = csi;
  return r;
}

double aggregate_gain(const Problem& problem, CsiMode csi) {
  if (csi == CsiMode::LongTerm) {
    double d = 0.0;
    for (const auto& ch : problem.channels) d += ch.gain_pow();
    return d;
  }
  double a = 0.0;
  for (const auto& ch : problem.channels) a += ch.gain_amp();
  return a * a;
}

}  // namespace

double power_for_duration(const ChannelState& channel, double t,
                          const DemandSpec& demand) {
  return power_for_gain(channel.gain_pow(), t, demand);
}

double t_min_feasible(const ChannelState& channel, const DemandSpec& demand,
                      const BsProfile& profile) {
  if (!(channel.gain_pow() > 0.0)) {
    throw InfeasibleError(Infeasibility::Channel, "zero channel gain");
  }
  const double bits_per_hz = demand.frame * demand.rate / demand.bandwidth;
  const double t = bits_per_hz /
                   (std::log1p(profile.max_power * channel.gain_pow() /
                               demand.noise_plus_interference()) /
                    std::numbers::ln2);
  if (!(t <= demand.frame)) {
    throw InfeasibleError(Infeasibility::Demand,
                          "rate unreachable: t_min = " + std::to_string(t) +
                              " s exceeds T");
  }
  return t;
}

double duration_lower_bound(const Problem& problem, std::size_t m,
                            const SearchConfig& cfg) {
  check_index(problem, m);
  double t = lower_bound_for_gain(problem.channels[m].gain_pow(),
                                  problem.profiles[m].max_power, problem.demand);
  if (cfg.t_floor && *cfg.t_floor > t) {
    if (*cfg.t_floor > problem.demand.frame) {
      throw InfeasibleError(Infeasibility::Demand, "t_floor exceeds T");
    }
    t = *cfg.t_floor;
  }
  return t;
}

double energy_single_bs(const Problem& problem, std::size_t m, double t) {
  check_index(problem, m);
  const DemandSpec& d = problem.demand;
  if (!(t > 0.0 && t <= d.frame)) {
    throw ContractError("energy_single_bs: t outside (0, T]");
  }
  const BsProfile& bs = problem.profiles[m];
  const double p = power_for_duration(problem.channels[m], t, d);
  if (p > bs.max_power) {
    throw ContractError("energy_single_bs: t below t_min (power above P_max)");
  }
  const double pa_term =
      problem.pa == PaModel::Tpa
          ? (std::sqrt(bs.max_power) / bs.max_efficiency) * std::sqrt(p) * t
          : (p / bs.ipa_eff()) * t;
  const double bs_circuit =
      (bs.dynamic_factor * d.rate + bs.static_power - bs.idle_power) * t;
  const double ue_circuit =
      (problem.ue.dynamic_factor * d.rate + problem.ue.static_power -
       problem.ue.idle_power) * t;
  return pa_term + bs_circuit + ue_circuit;
}

DurationSolution solve_duration_precise(const Problem& problem, std::size_t m,
                                        const SearchConfig& cfg) {
  const double lo = duration_lower_bound(problem, m, cfg);
  const auto best = minimize_grid_golden(
      [&](double t) { return energy_single_bs(problem, m, t); }, lo,
      problem.demand.frame, cfg.t_grid_points, cfg.refine_iters);
  if (!std::isfinite(best.value)) {
    throw InfeasibleError(Infeasibility::Demand, "no feasible duration");
  }
  return {best.x, best.value};
}

double solve_duration_approx(const Problem& problem, std::size_t m,
                             const SearchConfig& cfg) {
  const double t_min = duration_lower_bound(problem, m, cfg);
  const DemandSpec& d = problem.demand;
  const double interior = d.rate * d.frame * std::numbers::ln2 / (2.0 * d.bandwidth);
  if (interior < t_min) return t_min;
  if (d.spectral_efficiency() > 2.0 / std::numbers::ln2) return d.frame;
  return std::min(interior, d.frame);
}

SolveResult select_bs_precise(const Problem& problem, CsiMode csi,
                              const SearchConfig& cfg) {
  problem.validate();
  std::optional<SolveResult> best;
  for (std::size_t m = 0; m < problem.size(); ++m) {
    DurationSolution sol;
    try {
      sol = solve_duration_precise(problem, m, cfg);
    } catch (const InfeasibleError&) {
      continue;
    }
    SolveResult r = single_bs_result(problem, m, sol.t_star,
                                     duration_lower_bound(problem, m, cfg),
                                     SchemeTag::ProposedPrecise, csi);
    if (!best || r.energy.total < best->energy.total *
                                      (1.0 - cfg.energy_tie_tol_rel)) {
      best = std::move(r);
    }
  }
  if (!best) {
    throw InfeasibleError(Infeasibility::Demand, "no candidate BS can meet r_dl");
  }
  return *best;
}

std::size_t select_bs_approx(const Problem& problem) {
  if (problem.size() == 0) throw ContractError("empty candidate set");
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t m = 0; m < problem.size(); ++m) {
    const BsProfile& bs = problem.profiles[m];
    const double score =
        bs.max_efficiency * problem.channels[m].gain_amp() / std::sqrt(bs.max_power);
    if (score > best_score) {
      best_score = score;
      best = m;
    }
  }
  return best;
}

SolveResult solve_proposed_approx(const Problem& problem, CsiMode csi,
                                  const SearchConfig& cfg) {
  problem.validate();
  const std::size_t m = select_bs_approx(problem);
  const double t = solve_duration_approx(problem, m, cfg);
  return single_bs_result(problem, m, t, duration_lower_bound(problem, m, cfg),
                          SchemeTag::ProposedApprox, csi);
}

SolveResult baseline_max_rss(const Problem& problem, CsiMode csi,
                             const SearchConfig& cfg) {
  problem.validate();
  std::size_t best = 0;
  double best_rss = -1.0;
  for (std::size_t m = 0; m < problem.size(); ++m) {
    double rss = problem.channels[m].gain_pow();
    if (cfg.rss_weighting == RssWeighting::MaxPower) {
      rss *= problem.profiles[m].max_power;
    }
    if (rss > best_rss) {
      best_rss = rss;
      best = m;
    }
  }
  const DurationSolution sol = solve_duration_precise(problem, best, cfg);
  return single_bs_result(problem, best, sol.t_star,
                          duration_lower_bound(problem, best, cfg),
                          SchemeTag::TraditionalMaxRss, csi);
}

double all_access_power(const Problem& problem, CsiMode csi, double t) {
  return power_for_gain(aggregate_gain(problem, csi), t, problem.demand);
}

SolveResult baseline_all_access(const Problem& problem, CsiMode csi,
                                const SearchConfig& cfg) {
  problem.validate();
  const std::size_t n = problem.size();
  double cap = problem.profiles[0].max_power;
  for (const auto& bs : problem.profiles) cap = std::min(cap, bs.max_power);
  const double gain = aggregate_gain(problem, csi);

  double lo = lower_bound_for_gain(gain, cap, problem.demand);
  if (cfg.t_floor && *cfg.t_floor > lo) lo = *cfg.t_floor;
  if (lo > problem.demand.frame) {
    throw InfeasibleError(Infeasibility::Demand, "t_floor exceeds T");
  }

  Allocation scratch;
  scratch.powers.assign(n, 0.0);
  auto objective = [&](double t) {
    const double p = power_for_gain(gain, t, problem.demand);
    if (p > cap) return std::numeric_limits<double>::infinity();
    scratch.powers.assign(n, p);
    scratch.duration = t;
    return incremental_energy(scratch, problem.demand, problem.profiles,
                              problem.ue, problem.pa);
  };
  const auto best = minimize_grid_golden(objective, lo, problem.demand.frame,
                                         cfg.t_grid_points, cfg.refine_iters);
  if (!std::isfinite(best.value)) {
    throw InfeasibleError(Infeasibility::Demand, "no feasible duration");
  }

  SolveResult r;
  r.power = power_for_gain(gain, best.x, problem.demand);
  r.t_star = best.x;
  r.t_lower = lo;
  r.allocation.powers.assign(n, r.power);
  r.allocation.duration = best.x;
  r.energy = frame_energy(r.allocation, problem.demand, problem.profiles,
                          problem.ue, problem.pa);
  r.scheme = SchemeTag::AllAccessUniform;
  r.csi = csi;
  if (n == 1) r.chosen_bs = 0;
  return r;
}

SolveResult solve(SchemeTag scheme, const Problem& problem, CsiMode csi,
                  const SearchConfig& cfg) {
  switch (scheme) {
    case SchemeTag::ProposedPrecise: return select_bs_precise(problem, csi, cfg);
    case SchemeTag::ProposedApprox: return solve_proposed_approx(problem, csi, cfg);
    case SchemeTag::TraditionalMaxRss: return baseline_max_rss(problem, csi, cfg);
    case SchemeTag::AllAccessUniform: return baseline_all_access(problem, csi, cfg);
    case SchemeTag::OracleBruteForce: break;
  }
  throw ContractError("solve: the oracle has its own entry point");
}

}  // namespace greenhcn
