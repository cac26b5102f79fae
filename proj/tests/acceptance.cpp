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

// Acceptance gate: one PASS/FAIL line per criterion, tolerances pinned
// below. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "greenhcn/config.hpp"
#include "greenhcn/errors.hpp"
#include "greenhcn/montecarlo.hpp"
#include "greenhcn/oracle.hpp"
#include "greenhcn/report.hpp"
#include "greenhcn/verify.hpp"

namespace {

using namespace greenhcn;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and sizes.
constexpr std::size_t kOracleDrops = 200;
constexpr double kOracleUndercut = 0.005;
constexpr double kOracleSeconds = 120.0;
constexpr std::size_t kRateSolvesMin = 10000;
constexpr double kRateTol = 1e-9;
constexpr double kClosedFormTol = 0.02;
constexpr double kBoundaryOffset = 1e-3;
constexpr std::size_t kDominanceDrops = 500;
constexpr double kDominanceTol = 1e-9;  // line-search resolution on IPA/TPA, short/long
constexpr std::size_t kCsiDrops = 1000;
constexpr double kLinearR2 = 0.99;
constexpr double kApproxTol = 0.02;
constexpr double kSlopeTol = 0.05;
constexpr double kClampedFracMax = 0.05;  // max fraction of drops at t = T
constexpr double kSweepSeconds = 300.0;
constexpr std::size_t kConvexDrops = 100;
constexpr std::size_t kConvexGrid = 1000;

constexpr SchemeTag kSchemes[] = {SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox,
                                  SchemeTag::TraditionalMaxRss, SchemeTag::AllAccessUniform};
constexpr CsiMode kCsi[] = {CsiMode::LongTerm, CsiMode::ShortTerm};
constexpr PaModel kPa[] = {PaModel::Tpa, PaModel::Ipa};

int failures = 0;

void verdict(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void note(const std::string& s) {
  std::printf("    %s\n", s.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::optional<SolveResult> try_solve(SchemeTag s, const Problem& p, CsiMode csi,
                                     const SearchConfig& cfg) {
  try {
    return solve(s, p, csi, cfg);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

Drop sweep_drop_at(const RunConfig& c, std::size_t d, double se) {
  Drop drop = sweep_drop(c.sweep, c.sweep_inputs(), d);
  drop.demand.rate = se * drop.demand.bandwidth;
  return drop;
}

// 1. Single-BS optimality against the brute-force oracle.
void criterion_oracle(const RunConfig& c) {
  const auto t0 = Clock::now();
  std::size_t runs = 0, multi = 0, undercut = 0, skipped = 0;
  std::size_t cap_bound_failures = 0;
  double worst = -INFINITY;
  for (std::size_t i = 0; i < kOracleDrops; ++i) {
    const Drop drop = verification_drop(c, i);
    const Problem p = make_problem(drop, c.bs, c.ue, PaModel::Tpa);
    for (CsiMode csi : kCsi) {
      std::optional<OracleComparison> cmp;
      try {
        cmp = compare_with_oracle(p, csi, c.oracle, c.search);
      } catch (const InfeasibleError&) {
      }
      if (!cmp) {
        ++skipped;
        continue;
      }
      ++runs;
      worst = std::max(worst, cmp->undercut);
      const bool bad = cmp->oracle_active != 1 || cmp->undercut > kOracleUndercut;
      multi += cmp->oracle_active != 1;
      undercut += cmp->undercut > kOracleUndercut;
      if (bad) {
        const SolveResult r = select_bs_precise(p, csi, c.search);
        cap_bound_failures += r.t_star <= r.t_lower;
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = multi == 0 && undercut == 0 && secs <= kOracleSeconds;
  verdict(1, "single-BS optimality vs brute-force oracle", pass,
          fmt::format("{} drops, {} oracle runs, {} skipped infeasible; {} multi-BS optima, "
                      "{} undercuts > {:.1f}%, worst undercut {:.3g}%, {:.1f} s",
                      kOracleDrops, runs, skipped, multi, undercut, kOracleUndercut * 100,
                      worst * 100, secs));
  if (!pass) {
    note(fmt::format("{} of {} failing runs have the single-BS optimum pinned at P_max "
                     "(t* = t_min)",
                     cap_bound_failures, std::max(multi, undercut)));
  }
}

// 2. Rate equality over every scheme.
void criterion_rate(const RunConfig& c) {
  std::size_t solves = 0, bad = 0;
  double worst = 0.0;
  for (std::size_t d = 0; solves < kRateSolvesMin * 2 && d < 5000; ++d) {
    for (double se : {0.5, 1.5, 3.0, 5.0}) {
      const Drop drop = sweep_drop_at(c, d, se);
      for (PaModel pa : kPa) {
        const Problem p = make_problem(drop, c.bs, c.ue, pa);
        for (SchemeTag s : kSchemes) {
          for (CsiMode csi : kCsi) {
            const auto r = try_solve(s, p, csi, c.search);
            if (!r) continue;
            ++solves;
            const double err = rate_error(*r, p);
            worst = std::max(worst, err);
            bad += err > kRateTol;
          }
        }
      }
    }
  }
  verdict(2, "rate equality", solves >= kRateSolvesMin && bad == 0,
          fmt::format("{} solves, {} above {:g}, worst {:.3g}", solves, bad, kRateTol, worst));
}

// 3. Closed-form duration on circuit-free configurations.
void criterion_closed_form(const RunConfig& base) {
  RunConfig c = base;
  c.bs.static_power = c.bs.idle_power;
  c.bs.dynamic_factor = 0.0;
  c.ue.static_power = c.ue.idle_power;
  c.ue.dynamic_factor = 0.0;
  std::size_t cases = 0, outside = 0;
  double worst = 0.0, worst_se = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    Drop drop = verification_drop(c, i);
    for (double se : {0.5, 1.0, 1.5, 2.0, 2.5}) {
      drop.demand.rate = se * drop.demand.bandwidth;
      const Problem p = make_problem(drop, c.bs, c.ue, PaModel::Tpa);
      const DemandSpec& d = p.demand;
      const double interior = d.rate * d.frame * std::numbers::ln2 / (2.0 * d.bandwidth);
      for (std::size_t m = 0; m < p.size(); ++m) {
        double lo = 0.0;
        try {
          lo = duration_lower_bound(p, m, c.search);
        } catch (const InfeasibleError&) {
          continue;
        }
        if (!(lo <= interior && interior <= d.frame)) continue;
        ++cases;
        const double t = solve_duration_precise(p, m, c.search).t_star;
        const double dev = std::abs(t - interior) / interior;
        if (dev > worst) worst = dev, worst_se = se;
        outside += dev > kClosedFormTol;
      }
    }
  }

  // Branch boundary of the closed form, on a strong link.
  Problem strong;
  strong.channels = {ChannelState::from_power(1e-9)};
  strong.profiles = {c.bs};
  strong.ue = c.ue;
  const double edge = 2.0 / std::numbers::ln2;
  strong.demand.rate = (edge + kBoundaryOffset) * strong.demand.bandwidth;
  const bool above = solve_duration_approx(strong, 0, c.search) == strong.demand.frame;
  strong.demand.rate = (edge - kBoundaryOffset) * strong.demand.bandwidth;
  const bool below = solve_duration_approx(strong, 0, c.search) < strong.demand.frame;

  // Where the precise minimizer actually reaches T.
  double lo = 0.5, hi = 6.0;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * (lo + hi);
    strong.demand.rate = mid * strong.demand.bandwidth;
    (solve_duration_precise(strong, 0, c.search).t_star >= strong.demand.frame ? hi : lo) = mid;
  }

  verdict(3, "closed-form duration (circuit-free)",
          cases > 0 && outside == 0 && above && below,
          fmt::format("{} interior cases, {} beyond {:.0f}%, worst {:.2f}% at se {}; "
                      "closed-form T branch at 2/ln2 +/- 1e-3: {}/{}",
                      cases, outside, kClosedFormTol * 100, worst * 100, worst_se,
                      above ? "T" : "interior", below ? "interior" : "T"));
  note(fmt::format("precise t* reaches T at se = {:.4f}; closed-form threshold 2/ln2 = {:.4f}",
                   hi, edge));
}

// 4. Dominance under common random numbers.
void criterion_dominance(const RunConfig& c) {
  std::size_t pt = 0, pt_bad = 0, ipa = 0, ipa_bad = 0, sl = 0, sl_bad = 0;
  for (std::size_t d = 0; d < kDominanceDrops; ++d) {
    for (double se : {0.5, 1.0, 2.0, 3.0, 4.0}) {
      const Drop drop = sweep_drop_at(c, d, se);
      const Problem tpa = make_problem(drop, c.bs, c.ue, PaModel::Tpa);
      const Problem ipa_p = make_problem(drop, c.bs, c.ue, PaModel::Ipa);
      for (const Problem* p : {&tpa, &ipa_p}) {
        for (CsiMode csi : kCsi) {
          const auto a = try_solve(SchemeTag::ProposedPrecise, *p, csi, c.search);
          const auto b = try_solve(SchemeTag::TraditionalMaxRss, *p, csi, c.search);
          if (!a || !b) continue;
          ++pt;
          const bool same = a->chosen_bs == b->chosen_bs;
          pt_bad += !(same ? a->energy.total == b->energy.total
                           : a->energy.total < b->energy.total);
        }
        const auto l = try_solve(SchemeTag::AllAccessUniform, *p, CsiMode::LongTerm, c.search);
        const auto s = try_solve(SchemeTag::AllAccessUniform, *p, CsiMode::ShortTerm, c.search);
        if (l && s) {
          ++sl;
          sl_bad += s->energy.total > l->energy.total * (1.0 + kDominanceTol);
        }
      }
      for (SchemeTag s : kSchemes) {
        for (CsiMode csi : kCsi) {
          const auto a = try_solve(s, tpa, csi, c.search);
          const auto b = try_solve(s, ipa_p, csi, c.search);
          if (!a || !b) continue;
          ++ipa;
          ipa_bad += b->energy.total > a->energy.total * (1.0 + kDominanceTol);
        }
      }
    }
  }
  verdict(4, "dominance suite", pt_bad == 0 && ipa_bad == 0 && sl_bad == 0 && pt && ipa && sl,
          fmt::format("proposed<=traditional {}/{}, ipa<=tpa {}/{}, short<=long all-access "
                      "{}/{}",
                      pt - pt_bad, pt, ipa - ipa_bad, ipa, sl - sl_bad, sl));
}

// 5. Bit-identical proposed results across CSI modes.
void criterion_csi(const RunConfig& c) {
  std::size_t compared = 0, differ = 0;
  for (std::size_t d = 0; d < kCsiDrops; ++d) {
    for (double se : {1.0, 2.5}) {
      const Drop drop = sweep_drop_at(c, d, se);
      for (PaModel pa : kPa) {
        const Problem p = make_problem(drop, c.bs, c.ue, pa);
        for (SchemeTag s : {SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox}) {
          const auto a = try_solve(s, p, CsiMode::LongTerm, c.search);
          const auto b = try_solve(s, p, CsiMode::ShortTerm, c.search);
          ++compared;
          if (!a || !b) {
            differ += a.has_value() != b.has_value();
            continue;
          }
          const bool same = a->chosen_bs == b->chosen_bs && a->power == b->power &&
                            a->t_star == b->t_star && a->t_lower == b->t_lower &&
                            a->allocation.powers == b->allocation.powers &&
                            a->energy.total == b->energy.total &&
                            a->energy.pa == b->energy.pa;
          differ += !same;
        }
      }
    }
  }
  verdict(5, "CSI equivalence of the proposed scheme", differ == 0,
          fmt::format("{} drops, {} comparisons, {} differ", kCsiDrops, compared, differ));
}

const SweepRow* find_row(const std::vector<SweepRow>& rows, SchemeTag s, CsiMode csi,
                         PaModel pa, double se) {
  for (const auto& r : rows) {
    if (r.scheme == s && r.csi == csi && r.pa == pa && r.se == se) return &r;
  }
  return nullptr;
}

std::vector<const SweepRow*> series(const std::vector<SweepRow>& rows, SchemeTag s,
                                    CsiMode csi, PaModel pa) {
  std::vector<const SweepRow*> out;
  for (const auto& r : rows) {
    if (r.scheme == s && r.csi == csi && r.pa == pa) out.push_back(&r);
  }
  return out;
}

struct Fit {
  double slope = 0.0, r2 = 0.0;
};

Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i], syy += y[i] * y[i];
  }
  const double cov = sxy - sx * sy / n, vx = sxx - sx * sx / n, vy = syy - sy * sy / n;
  Fit f;
  f.slope = cov / vx;
  f.r2 = vy > 0 ? cov * cov / (vx * vy) : 1.0;
  return f;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 6. Sweep curve shapes.
std::vector<SweepRow> criterion_shapes(const RunConfig& c) {
  const auto t0 = Clock::now();
  const auto rows = run_sweep(c.sweep, c.sweep_inputs());
  const double secs = seconds_since(t0);
  const double frame = c.demand.frame;

  // (a) energy curve
  bool monotone = true, linear = true, superlinear = true, approx_ok = true, aa_above = true;
  double r2_min = 1.0, approx_worst = 0.0;
  std::string monotone_detail, aa_detail;
  for (CsiMode csi : kCsi) {
    const auto prop = series(rows, SchemeTag::ProposedPrecise, csi, PaModel::Tpa);
    std::vector<double> lx, ly, hx, hy;
    for (std::size_t i = 0; i < prop.size(); ++i) {
      const SweepRow& r = *prop[i];
      if (i > 0 && !(r.mean_energy >= prop[i - 1]->mean_energy)) {
        if (monotone) {
          monotone_detail = fmt::format("first decrease at se {} ({:.4g} -> {:.4g} mJ)", r.se,
                                        prop[i - 1]->mean_energy * 1e3, r.mean_energy * 1e3);
        }
        monotone = false;
      }
      if (r.se <= 1.0) lx.push_back(r.se), ly.push_back(r.mean_energy);
      if (r.se >= 4.0) hx.push_back(r.se), hy.push_back(r.mean_energy);
    }
    const Fit low = linear_fit(lx, ly);
    r2_min = std::min(r2_min, low.r2);
    linear = linear && low.r2 >= kLinearR2;
    for (std::size_t i = 1; i + 1 < hy.size(); ++i) {
      superlinear = superlinear && hy[i + 1] - 2 * hy[i] + hy[i - 1] >= 0.0;
    }
    superlinear = superlinear && hy.size() >= 2 &&
                  (hy.back() - hy.front()) / (hx.back() - hx.front()) > low.slope;
    {
      const PaModel pa = PaModel::Tpa;
      for (const SweepRow* r : series(rows, SchemeTag::ProposedPrecise, csi, pa)) {
        const SweepRow* a = find_row(rows, SchemeTag::ProposedApprox, csi, pa, r->se);
        const SweepRow* aa = find_row(rows, SchemeTag::AllAccessUniform, csi, pa, r->se);
        if (r->se >= 2.0 && a) {
          const double gap = std::abs(a->mean_energy - r->mean_energy) / r->mean_energy;
          approx_worst = std::max(approx_worst, gap);
          approx_ok = approx_ok && gap <= kApproxTol;
        }
        if (!(aa && aa->mean_energy > r->mean_energy)) {
          if (aa_above) {
            aa_detail = fmt::format(" [first at {}/{} se {}]", to_string(csi), to_string(pa),
                                    r->se);
          }
          aa_above = false;
        }
      }
    }
  }
  const bool a_pass = monotone && linear && superlinear && approx_ok && aa_above;

  // (b) duration curve
  const auto prop_t = series(rows, SchemeTag::ProposedPrecise, CsiMode::LongTerm, PaModel::Tpa);
  std::vector<double> ux, uy;
  for (const SweepRow* r : prop_t) {
    const double clamped =
        static_cast<double>(r->frame_clamped) / std::max<std::size_t>(1, r->drops_used);
    if (clamped <= kClampedFracMax) ux.push_back(r->se), uy.push_back(r->mean_t_star);
  }
  const double target = frame * std::numbers::ln2 / 2.0;
  std::optional<double> saturation;
  for (const auto& s : duration_curve(rows, frame)) {
    if (s.scheme == SchemeTag::ProposedPrecise && s.csi == CsiMode::LongTerm &&
        s.pa == PaModel::Tpa) {
      saturation = s.saturation_se;
    }
  }
  std::string clamp_detail;
  for (const SweepRow* r : prop_t) {
    if (r->se > 3.0) break;
    clamp_detail += fmt::format(" {}:{:.2f}/{:.2f}", r->se,
                                static_cast<double>(r->floor_clamped) / r->drops_used,
                                static_cast<double>(r->frame_clamped) / r->drops_used);
  }
  double slope = NAN;
  if (ux.size() >= 2) slope = linear_fit(ux, uy).slope;
  const bool slope_ok = ux.size() >= 2 && std::abs(slope - target) / target <= kSlopeTol;
  const bool b_pass = slope_ok && saturation.has_value();

  // (c) PA comparison
  bool below = true, largest_first = true;
  std::size_t curves = 0;
  std::string ratio_detail;
  for (const auto& cmp : compare_pa_models(rows)) {
    if (cmp.scheme == SchemeTag::ProposedApprox) continue;  // fixed closed-form duration
    ++curves;
    below = below && cmp.ipa_dominates;
    std::size_t peak = 0;
    for (std::size_t i = 0; i < cmp.se.size(); ++i) {
      below = below && cmp.energy_ipa[i] < cmp.energy_tpa[i];
      if (cmp.energy_tpa[i] / cmp.energy_ipa[i] > cmp.energy_tpa[peak] / cmp.energy_ipa[peak]) {
        peak = i;
      }
    }
    if (peak != 0) {
      largest_first = false;
      ratio_detail += fmt::format(" {}/{} peaks at se {} ({:.4f} vs {:.4f});",
                                  to_string(cmp.scheme), to_string(cmp.csi), cmp.se[peak],
                                  cmp.energy_tpa[peak] / cmp.energy_ipa[peak],
                                  cmp.energy_tpa[0] / cmp.energy_ipa[0]);
    }
  }
  const bool c_pass = below && largest_first && curves > 0;

  verdict(6, "sweep curve shapes", a_pass && b_pass && c_pass && secs <= kSweepSeconds,
          fmt::format("(a) {} (b) {} (c) {}; sweep {} points x {} drops in {:.1f} s",
                      a_pass ? "pass" : "fail", b_pass ? "pass" : "fail",
                      c_pass ? "pass" : "fail", c.sweep.se_points.size(),
                      c.sweep.drops_per_point, secs));
  note(fmt::format("(a) monotone {}{}; low-se R^2 {:.5f}; high-se super-linear {}; "
                   "approx gap (tpa) se>=2 worst {:.3f}%; all-access above {}{}",
                   monotone ? "yes" : "no",
                   monotone ? "" : " [" + monotone_detail + "]", r2_min,
                   superlinear ? "yes" : "no", approx_worst * 100, aa_above ? "yes" : "no",
                   aa_detail));
  const SweepRow* last = prop_t.empty() ? nullptr : prop_t.back();
  note(fmt::format("(a) infeasible fraction at se {}: {:.3f} (means are over feasible drops)",
                   last ? last->se : 0.0, last ? last->infeasible_fraction : 0.0));
  note(fmt::format("(b) unclamped points {}, slope {:.4g} ms per unit se vs {:.4g}; "
                   "saturation at se {}",
                   ux.size(), slope * 1e3, target * 1e3,
                   saturation ? fmt::format("{}", *saturation) : std::string("none")));
  note("(b) clamped fraction at t_min / at T per se:" + clamp_detail);
  note(fmt::format("(c) {} curves; ipa below tpa {}; largest ratio at smallest se {}{}",
                   curves, below ? "yes" : "no", largest_first ? "yes" : "no", ratio_detail));

  return rows;
}

// 8. Determinism: rerun with another worker count and compare files.
void criterion_determinism(const RunConfig& c, const std::vector<SweepRow>& rows) {
  const double frame = c.demand.frame;
  RunConfig c2 = c;
  c2.sweep.threads = c.sweep.threads == 1 ? 4 : 1;
  const auto rows2 = run_sweep(c2.sweep, c2.sweep_inputs());
  const auto base = std::filesystem::temp_directory_path() / "greenhcn_acceptance";
  std::filesystem::remove_all(base);
  const auto f1 = write_sweep_outputs(rows, frame, base / "a", true);
  const auto f2 = write_sweep_outputs(rows2, frame, base / "b", true);
  bool same = f1.size() == f2.size();
  for (std::size_t i = 0; same && i < f1.size(); ++i) same = slurp(f1[i]) == slurp(f2[i]);
  std::filesystem::remove_all(base);
  verdict(8, "determinism across worker counts", same,
          fmt::format("{} output files compared, threads {} vs {}", f1.size(),
                      c.sweep.threads, c2.sweep.threads));
}

// 7. Discrete convexity of the single-BS duration objective.
void criterion_convexity(const RunConfig& c) {
  std::size_t drops = 0, curves = 0, bad = 0, attempts = 0;
  for (std::size_t i = 0; drops < kConvexDrops && i < 100 * kConvexDrops; ++i, ++attempts) {
    Drop drop = verification_drop(c, i);
    std::vector<std::vector<double>> profiles;
    bool usable = true;
    for (double se : {1.5, 2.0, 3.0}) {
      drop.demand.rate = se * drop.demand.bandwidth;
      for (PaModel pa : kPa) {
        const Problem p = make_problem(drop, c.bs, c.ue, pa);
        std::size_t feasible = 0;
        for (std::size_t m = 0; m < p.size(); ++m) {
          try {
            profiles.push_back(duration_profile(p, m, kConvexGrid, c.search));
            ++feasible;
          } catch (const InfeasibleError&) {
          }
        }
        usable = usable && feasible > 0;
      }
    }
    if (!usable) continue;
    ++drops;
    for (const auto& prof : profiles) {
      ++curves;
      bad += !is_unimodal(prof);
    }
  }
  verdict(7, "discrete convexity of the duration objective",
          drops == kConvexDrops && bad == 0,
          fmt::format("{} drops ({} drawn, drops with no feasible BS at some se skipped), "
                      "{} curves, {} not unimodal",
                      drops, attempts, curves, bad));
}

}  // namespace

int main() {
  RunConfig c = parse_config("");
  std::printf("acceptance: default configuration, master seed %llu\n",
              static_cast<unsigned long long>(c.sweep.master_seed));
  criterion_oracle(c);
  criterion_rate(c);
  criterion_closed_form(c);
  criterion_dominance(c);
  criterion_csi(c);
  const auto rows = criterion_shapes(c);
  criterion_convexity(c);
  criterion_determinism(c, rows);
  std::printf("acceptance: %d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
