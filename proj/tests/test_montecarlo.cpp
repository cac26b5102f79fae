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

#include <cmath>
#include <numeric>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "greenhcn/errors.hpp"
#include "greenhcn/montecarlo.hpp"

namespace greenhcn {
namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.se_points = {0.5, 1.0, 2.0};
  s.drops_per_point = 24;
  s.master_seed = 5;
  s.threads = 1;
  return s;
}

TEST(SeRange, InclusiveGrid) {
  const auto g = SweepSpec::se_range(0.25, 6.0, 0.25);
  ASSERT_EQ(g.size(), 24u);
  EXPECT_DOUBLE_EQ(g.front(), 0.25);
  EXPECT_DOUBLE_EQ(g.back(), 6.0);
  EXPECT_DOUBLE_EQ(g[3], 1.0);
}

TEST(SweepSpec, Validation) {
  SweepSpec s = small_spec();
  s.drops_per_point = 0;
  EXPECT_THROW(s.validate(), ContractError);
  s = small_spec();
  s.se_points = {1.0, 0.5};
  EXPECT_THROW(s.validate(), ContractError);
  s = small_spec();
  s.schemes = {SchemeTag::OracleBruteForce};
  EXPECT_THROW(s.validate(), ContractError);
}

TEST(PairwiseSum, MatchesLongDouble) {
  std::vector<double> v;
  long double ref = 0.0L;
  for (int i = 1; i <= 10007; ++i) {
    v.push_back(1.0 / i);
    ref += 1.0L / i;
  }
  EXPECT_NEAR(pairwise_sum(v.data(), v.size()), static_cast<double>(ref), 1e-13);
  EXPECT_EQ(pairwise_sum(v.data(), 0), 0.0);
}

TEST(Sweep, RowLayoutAndOrdering) {
  const SweepSpec s = small_spec();
  const auto rows = run_sweep(s, SweepInputs{});
  ASSERT_EQ(rows.size(), 3u * 4u * 2u * 2u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const SweepRow& r) {
      return std::make_tuple(static_cast<int>(r.scheme), static_cast<int>(r.csi),
                             static_cast<int>(r.pa), r.se);
    };
    EXPECT_LT(key(rows[i - 1]), key(rows[i]));
  }
  for (const auto& r : rows) {
    EXPECT_EQ(r.drops_total, s.drops_per_point);
    EXPECT_NEAR(r.infeasible_fraction,
                1.0 - static_cast<double>(r.drops_used) / r.drops_total, 1e-15);
    if (r.drops_used > 0) {
      EXPECT_GT(r.mean_energy, r.mean_idle_floor);
    }
  }
}

TEST(Sweep, IndependentOfWorkerCount) {
  SweepSpec a = small_spec(), b = small_spec();
  b.threads = 3;
  const auto ra = run_sweep(a, SweepInputs{}), rb = run_sweep(b, SweepInputs{});
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].mean_energy, rb[i].mean_energy);
    EXPECT_EQ(ra[i].mean_t_star, rb[i].mean_t_star);
    EXPECT_EQ(ra[i].drops_used, rb[i].drops_used);
  }
}

TEST(Sweep, CommonRandomNumbersAcrossPoints) {
  const SweepSpec s = small_spec();
  const SweepOutcomes o = evaluate_sweep(s, SweepInputs{});
  for (std::size_t d = 0; d < s.drops_per_point; ++d) {
    std::uint64_t seed = 0;
    sweep_drop(s, SweepInputs{}, d, &seed);
    EXPECT_EQ(seed, o.drop_seeds[d]);
    // Proposed energy is non-decreasing in se on every drop.
    for (std::size_t pt = 1; pt < s.se_points.size(); ++pt) {
      const auto& lo = o.at(d, pt - 1, 0, 0, 0);
      const auto& hi = o.at(d, pt, 0, 0, 0);
      if (lo.feasible && hi.feasible) {
        EXPECT_LE(lo.energy, hi.energy);
      }
      if (!lo.feasible) {
        EXPECT_FALSE(hi.feasible);
      }
    }
  }
}

TEST(Sweep, AllInfeasiblePointHasNanMean) {
  SweepSpec s = small_spec();
  s.se_points = {60.0};
  s.drops_per_point = 4;
  for (const auto& r : run_sweep(s, SweepInputs{})) {
    EXPECT_EQ(r.drops_used, 0u);
    EXPECT_TRUE(std::isnan(r.mean_energy));
    EXPECT_EQ(r.infeasible_fraction, 1.0);
  }
}

SweepRow row(double se, SchemeTag s, PaModel pa, double e, double t) {
  SweepRow r;
  r.se = se;
  r.scheme = s;
  r.pa = pa;
  r.mean_energy = e;
  r.mean_t_star = t;
  r.drops_used = r.drops_total = 1;
  return r;
}

TEST(Curves, SaturationAndPaPairing) {
  std::vector<SweepRow> rows{
      row(1.0, SchemeTag::ProposedPrecise, PaModel::Tpa, 3.0, 0.004),
      row(2.0, SchemeTag::ProposedPrecise, PaModel::Tpa, 5.0, 0.008),
      row(3.0, SchemeTag::ProposedPrecise, PaModel::Tpa, 9.0, 0.01),
      row(4.0, SchemeTag::ProposedPrecise, PaModel::Tpa, 20.0, 0.01),
      row(1.0, SchemeTag::ProposedPrecise, PaModel::Ipa, 1.0, 0.01),
      row(2.0, SchemeTag::ProposedPrecise, PaModel::Ipa, 6.0, 0.01),
  };
  const auto series = duration_curve(rows, 0.01);
  ASSERT_EQ(series.size(), 2u);
  ASSERT_TRUE(series[0].saturation_se);
  EXPECT_EQ(*series[0].saturation_se, 3.0);
  EXPECT_EQ(*series[1].saturation_se, 1.0);
  const auto cmp = compare_pa_models(rows);
  ASSERT_EQ(cmp.size(), 1u);
  EXPECT_EQ(cmp[0].se.size(), 2u);
  EXPECT_FALSE(cmp[0].ipa_dominates);
}

}  // namespace
}  // namespace greenhcn
