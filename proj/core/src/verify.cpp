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

#include "greenhcn/verify.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "greenhcn/errors.hpp"
#include "greenhcn/rng.hpp"

namespace greenhcn {

namespace {

constexpr std::uint64_t kVerifyStream = 0x7665726966ULL;
constexpr std::size_t kMaxRedraws = 10000;
constexpr double kDominanceTol = 1e-9;
constexpr double kConvexitySe[] = {1.5, 2.0, 3.0};
constexpr double kApproxSe[] = {2.0, 3.0, 4.0};

bool bit_equal(const SolveResult& a, const SolveResult& b) {
  return a.chosen_bs == b.chosen_bs && a.power == b.power && a.t_star == b.t_star &&
         a.t_lower == b.t_lower && a.allocation.powers == b.allocation.powers &&
         a.allocation.duration == b.allocation.duration &&
         a.energy.total == b.energy.total && a.energy.pa == b.energy.pa;
}

std::optional<SolveResult> try_solve(SchemeTag s, const Problem& p, CsiMode csi,
                                     const SearchConfig& cfg) {
  try {
    return solve(s, p, csi, cfg);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

}  // namespace

void CheckResult::record(bool pass, const std::string& detail) {
  if (pass) {
    ++passed;
  } else {
    if (failed == 0) first_failure = detail;
    ++failed;
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

std::string VerifyReport::format() const {
  std::string out;
  for (const auto& c : checks) {
    out += fmt::format("{:<4} {:<28} passed {:>6}  failed {:>4}  skipped {:>4}\n",
                       c.ok() ? "PASS" : "FAIL", c.name, c.passed, c.failed, c.skipped);
    if (!c.first_failure.empty()) out += fmt::format("     first failure: {}\n", c.first_failure);
  }
  out += ok() ? "verify: all checks passed\n" : "verify: FAILED\n";
  return out;
}

Drop verification_drop(const RunConfig& config, std::size_t i) {
  DropConfig dc = config.drop;
  dc.rule = CandidateRule::KNearest;
  dc.k_nearest.k = 2 + i % 2;
  for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const std::uint64_t seed =
        derive_seed(config.sweep.master_seed, kVerifyStream + attempt, i);
    try {
      return build_drop(config.geometry, config.demand, dc, seed);
    } catch (const DropRejected&) {
    }
  }
  throw DropRejected("no acceptable verification drop");
}

bool is_unimodal(std::span<const double> values, double rel_tol) {
  if (values.size() < 3) return true;
  const auto it = std::min_element(values.begin(), values.end());
  const std::size_t k = static_cast<std::size_t>(it - values.begin());
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double tol = rel_tol * scale;
  for (std::size_t i = 0; i < k; ++i) {
    if (values[i + 1] > values[i] + tol) return false;
  }
  for (std::size_t i = k; i + 1 < values.size(); ++i) {
    if (values[i + 1] < values[i] - tol) return false;
  }
  return true;
}

std::vector<double> duration_profile(const Problem& problem, std::size_t m,
                                     std::size_t points, const SearchConfig& cfg) {
  const double lo = duration_lower_bound(problem, m, cfg);
  const double hi = problem.demand.frame;
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? hi
                                 : lo + (hi - lo) * static_cast<double>(i) /
                                            static_cast<double>(points - 1);
    out[i] = energy_single_bs(problem, m, std::min(t, hi));
  }
  return out;
}

std::optional<OracleComparison> compare_with_oracle(const Problem& problem, CsiMode csi,
                                                    const OracleGrid& grid,
                                                    const SearchConfig& cfg) {
  SolveResult proposed;
  try {
    proposed = select_bs_precise(problem, csi, cfg);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
  const OracleResult o = brute_force_oracle(problem, csi, grid);
  OracleComparison c;
  c.proposed = proposed.energy.total;
  c.oracle = o.energy.total;
  c.oracle_active = o.active_count;
  c.undercut = (c.proposed - c.oracle) / c.proposed;
  return c;
}

double rate_error(const SolveResult& result, const Problem& problem) {
  return std::abs(achieved_rate(result, problem) - problem.demand.rate) / problem.demand.rate;
}

VerifyReport run_verification(const RunConfig& config, const VerifyOptions& options) {
  if (options.drops == 0) throw ConfigError("verify: --drops must be >= 1");
  const SearchConfig& cfg = config.search;
  CheckResult single{"oracle_single_active"}, undercut{"oracle_no_undercut"},
      split{"oracle_split_dominated"}, rate{"rate_equality"},
      prop_trad{"proposed_le_traditional"}, ipa{"ipa_le_tpa"},
      short_long{"short_le_long_all_access"}, csi_eq{"csi_equivalence"},
      convex{"duration_unimodal"}, approx{"approx_within_tolerance"};

  constexpr SchemeTag kSchemes[] = {SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox,
                                    SchemeTag::TraditionalMaxRss,
                                    SchemeTag::AllAccessUniform};
  constexpr CsiMode kCsi[] = {CsiMode::LongTerm, CsiMode::ShortTerm};
  constexpr std::size_t kApproxPoints = std::size(kApproxSe);
  double approx_sum[kApproxPoints] = {}, precise_sum[kApproxPoints] = {};

  OracleGrid grid = config.oracle;
  if (options.sabotage_split) grid.min_active = 2;

  for (std::size_t i = 0; i < options.drops; ++i) {
    const Drop drop = verification_drop(config, i);
    const std::string tag = fmt::format("drop {}", i);

    // Oracle comparison at the configured demand.
    {
      const Problem p = make_problem(drop, config.bs, config.ue, PaModel::Tpa);
      for (CsiMode csi : kCsi) {
        std::optional<OracleComparison> c;
        try {
          c = compare_with_oracle(p, csi, grid, cfg);
        } catch (const InfeasibleError&) {
          undercut.skipped++;
          (options.sabotage_split ? split : single).skipped++;
          continue;
        }
        if (!c) {
          undercut.skipped++;
          (options.sabotage_split ? split : single).skipped++;
          continue;
        }
        const std::string where = fmt::format("{} {} CSI", tag, to_string(csi));
        if (options.sabotage_split) {
          split.record(c->undercut <= options.oracle_tolerance,
                       fmt::format("{}: split undercuts by {:.3g}", where, c->undercut));
        } else {
          single.record(c->oracle_active == 1,
                        fmt::format("{}: oracle uses {} BSs", where, c->oracle_active));
          undercut.record(c->undercut <= options.oracle_tolerance,
                          fmt::format("{}: oracle undercuts by {:.3g}", where, c->undercut));
        }
      }
    }

    // Scheme invariants at the configured demand, both PA models.
    for (PaModel pa : {PaModel::Tpa, PaModel::Ipa}) {
      const Problem p = make_problem(drop, config.bs, config.ue, pa);
      for (CsiMode csi : kCsi) {
        std::optional<SolveResult> res[std::size(kSchemes)];
        for (std::size_t s = 0; s < std::size(kSchemes); ++s) {
          res[s] = try_solve(kSchemes[s], p, csi, cfg);
          if (!res[s]) {
            rate.skipped++;
            continue;
          }
          const double err = rate_error(*res[s], p);
          rate.record(err <= cfg.rate_tol_rel,
                      fmt::format("{} {}: rate error {:.3g}", tag,
                                  to_string(kSchemes[s]), err));
        }
        if (res[0] && res[2]) {
          const double ep = res[0]->energy.total, et = res[2]->energy.total;
          const bool same = res[0]->chosen_bs == res[2]->chosen_bs;
          prop_trad.record(same ? ep == et : ep < et,
                           fmt::format("{}: proposed {} J vs traditional {} J", tag, ep, et));
        } else {
          prop_trad.skipped++;
        }
      }
    }
    {
      const Problem tpa = make_problem(drop, config.bs, config.ue, PaModel::Tpa);
      const Problem ipa_p = make_problem(drop, config.bs, config.ue, PaModel::Ipa);
      for (SchemeTag s : kSchemes) {
        for (CsiMode csi : kCsi) {
          const auto a = try_solve(s, tpa, csi, cfg), b = try_solve(s, ipa_p, csi, cfg);
          if (!a || !b) {
            ipa.skipped++;
            continue;
          }
          ipa.record(b->energy.total <= a->energy.total * (1.0 + kDominanceTol),
                     fmt::format("{} {}: ipa {} J > tpa {} J", tag, to_string(s),
                                 b->energy.total, a->energy.total));
        }
      }
      for (const Problem* p : {&tpa, &ipa_p}) {
        const auto l = try_solve(SchemeTag::AllAccessUniform, *p, CsiMode::LongTerm, cfg);
        const auto s = try_solve(SchemeTag::AllAccessUniform, *p, CsiMode::ShortTerm, cfg);
        if (!l || !s) {
          short_long.skipped++;
        } else {
          short_long.record(s->energy.total <= l->energy.total * (1.0 + kDominanceTol),
                            fmt::format("{}: short {} J > long {} J", tag, s->energy.total,
                                        l->energy.total));
        }
        for (SchemeTag sc : {SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox}) {
          const auto a = try_solve(sc, *p, CsiMode::LongTerm, cfg);
          const auto b = try_solve(sc, *p, CsiMode::ShortTerm, cfg);
          if (!a || !b) {
            csi_eq.record(!a && !b, tag + ": feasibility differs across CSI modes");
            continue;
          }
          csi_eq.record(bit_equal(*a, *b), fmt::format("{} {}: results differ across CSI",
                                                       tag, to_string(sc)));
        }
      }
    }

    // Convexity of the duration objective and approximation tightness.
    Drop d2 = drop;
    for (double se : kConvexitySe) {
      d2.demand.rate = se * d2.demand.bandwidth;
      const Problem p = make_problem(d2, config.bs, config.ue, PaModel::Tpa);
      for (std::size_t m = 0; m < p.size(); ++m) {
        std::vector<double> prof;
        try {
          prof = duration_profile(p, m, options.convexity_grid, cfg);
        } catch (const InfeasibleError&) {
          convex.skipped++;
          continue;
        }
        convex.record(is_unimodal(prof),
                      fmt::format("{} BS {} se {}: not unimodal", tag, m, se));
      }
    }
    for (std::size_t k = 0; k < kApproxPoints; ++k) {
      d2.demand.rate = kApproxSe[k] * d2.demand.bandwidth;
      const Problem p = make_problem(d2, config.bs, config.ue, PaModel::Tpa);
      const auto a = try_solve(SchemeTag::ProposedApprox, p, CsiMode::LongTerm, cfg);
      const auto b = try_solve(SchemeTag::ProposedPrecise, p, CsiMode::LongTerm, cfg);
      if (a && b) {
        approx_sum[k] += a->energy.total;
        precise_sum[k] += b->energy.total;
      }
    }
  }
  for (std::size_t k = 0; k < kApproxPoints; ++k) {
    if (precise_sum[k] <= 0.0) {
      approx.skipped++;
      continue;
    }
    const double gap = std::abs(approx_sum[k] - precise_sum[k]) / precise_sum[k];
    approx.record(gap <= options.approx_tolerance,
                  fmt::format("se {}: mean approx/precise gap {:.3g}", kApproxSe[k], gap));
  }

  VerifyReport report;
  if (options.sabotage_split) {
    report.checks.push_back(split);
  } else {
    report.checks.push_back(single);
    report.checks.push_back(undercut);
  }
  for (auto* c : {&rate, &prop_trad, &ipa, &short_long, &csi_eq, &convex, &approx}) {
    report.checks.push_back(*c);
  }
  return report;
}

}  // namespace greenhcn
