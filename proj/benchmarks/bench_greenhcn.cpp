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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "greenhcn/montecarlo.hpp"
#include "greenhcn/optimizer.hpp"
#include "greenhcn/oracle.hpp"
#include "greenhcn/scenario.hpp"

namespace {

using namespace greenhcn;

Problem sample_problem(double se, PaModel pa) {
  Problem p;
  p.demand.rate = se * p.demand.bandwidth;
  for (double g : {3e-14, 8e-14, 2e-14}) {
    p.channels.push_back(ChannelState::from_power(g));
    p.profiles.emplace_back();
  }
  p.pa = pa;
  return p;
}

void BM_BuildDrop(benchmark::State& state) {
  Geometry g;
  g.bs_density = 100.0;
  DemandSpec d;
  DropConfig c;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(build_drop(g, d, c, seed++));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_BuildDrop);

void BM_SelectPrecise(benchmark::State& state) {
  const Problem p = sample_problem(static_cast<double>(state.range(0)) / 4.0, PaModel::Tpa);
  for (auto _ : state) benchmark::DoNotOptimize(select_bs_precise(p, CsiMode::LongTerm));
}
BENCHMARK(BM_SelectPrecise)->Arg(2)->Arg(8)->Arg(16);

void BM_SelectApprox(benchmark::State& state) {
  const Problem p = sample_problem(2.0, PaModel::Tpa);
  for (auto _ : state) benchmark::DoNotOptimize(solve_proposed_approx(p, CsiMode::LongTerm));
}
BENCHMARK(BM_SelectApprox);

void BM_AllAccess(benchmark::State& state) {
  const Problem p = sample_problem(2.0, PaModel::Tpa);
  for (auto _ : state) benchmark::DoNotOptimize(baseline_all_access(p, CsiMode::ShortTerm));
}
BENCHMARK(BM_AllAccess);

void BM_Oracle(benchmark::State& state) {
  Problem p = sample_problem(1.0, PaModel::Tpa);
  p.channels.resize(static_cast<std::size_t>(state.range(0)));
  p.profiles.resize(p.channels.size());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(p, CsiMode::ShortTerm));
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SweepPoint(benchmark::State& state) {
  SweepSpec s;
  s.se_points = {1.0};
  s.drops_per_point = 100;
  s.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(s, SweepInputs{}));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
