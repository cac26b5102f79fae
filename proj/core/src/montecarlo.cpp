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

#include "greenhcn/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "greenhcn/errors.hpp"

namespace greenhcn {

std::vector<double> SweepSpec::se_range(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw ContractError("se range needs step > 0 and stop >= start");
  }
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double v = start + step * static_cast<double>(i);
    if (v > stop + step * 1e-6) break;
    out.push_back(v);
  }
  return out;
}

void SweepSpec::validate() const {
  if (se_points.empty()) throw ContractError("sweep.se_points must not be empty");
  for (std::size_t i = 0; i < se_points.size(); ++i) {
    if (!(se_points[i] > 0.0)) throw ContractError("sweep.se_points must be > 0");
    if (i > 0 && !(se_points[i] > se_points[i - 1])) {
      throw ContractError("sweep.se_points must be strictly increasing");
    }
  }
  if (drops_per_point < 1) throw ContractError("sweep.drops_per_point must be >= 1");
  if (schemes.empty() || csi_modes.empty() || pa_models.empty()) {
    throw ContractError("sweep needs at least one scheme, CSI mode and PA model");
  }
  for (SchemeTag s : schemes) {
    if (s == SchemeTag::OracleBruteForce) {
      throw ContractError("the oracle is not a sweep scheme");
    }
  }
}

std::uint64_t sweep_drop_seed(std::uint64_t master, std::size_t drop,
                              std::size_t attempt) {
  return derive_seed(master, drop, attempt);
}

Drop sweep_drop(const SweepSpec& spec, const SweepInputs& inputs, std::size_t d,
                std::uint64_t* accepted_seed) {
  for (std::size_t attempt = 0; attempt < spec.max_redraws; ++attempt) {
    const std::uint64_t seed = sweep_drop_seed(spec.master_seed, d, attempt);
    try {
      Drop drop = build_drop(inputs.geometry, inputs.demand, inputs.drop, seed);
      if (accepted_seed) *accepted_seed = seed;
      return drop;
    } catch (const DropRejected&) {
    }
  }
  throw DropRejected("no acceptable drop after max_redraws attempts");
}

namespace {

void evaluate_one_drop(const SweepSpec& spec, const SweepInputs& inputs,
                       std::size_t d, SweepOutcomes& out) {
  Drop drop = sweep_drop(spec, inputs, d, &out.drop_seeds[d]);
  for (std::size_t pt = 0; pt < spec.se_points.size(); ++pt) {
    drop.demand.rate = spec.se_points[pt] * drop.demand.bandwidth;
    for (std::size_t pi = 0; pi < spec.pa_models.size(); ++pi) {
      const Problem problem =
          make_problem(drop, inputs.bs, inputs.ue, spec.pa_models[pi]);
      const double idle =
          idle_frame_energy(problem.demand, problem.profiles, problem.ue);
      for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
        for (std::size_t ci = 0; ci < spec.csi_modes.size(); ++ci) {
          DropOutcome& cell = out.cells[out.index(d, pt, si, ci, pi)];
          cell.idle_floor = idle;
          try {
            const SolveResult r =
                solve(spec.schemes[si], problem, spec.csi_modes[ci], inputs.search);
            cell.feasible = true;
            cell.energy = r.energy.total;
            cell.t_star = r.t_star;
            cell.t_lower = r.t_lower;
            cell.chosen_bs = r.chosen_bs;
            cell.at_floor = r.t_star <= r.t_lower;
            cell.at_frame = r.t_star >= problem.demand.frame;
          } catch (const InfeasibleError&) {
            cell.feasible = false;
          }
        }
      }
    }
  }
}

}  // namespace

SweepOutcomes evaluate_sweep(const SweepSpec& spec, const SweepInputs& inputs) {
  spec.validate();
  inputs.search.validate();
  SweepOutcomes out;
  out.drops = spec.drops_per_point;
  out.points = spec.se_points.size();
  out.schemes = spec.schemes.size();
  out.csi = spec.csi_modes.size();
  out.pa = spec.pa_models.size();
  out.cells.resize(out.drops * out.points * out.schemes * out.csi * out.pa);
  out.drop_seeds.resize(out.drops);

  std::size_t workers = spec.threads == 0 ? std::thread::hardware_concurrency()
                                          : spec.threads;
  workers = std::clamp<std::size_t>(workers, 1, out.drops);

  if (workers == 1) {
    for (std::size_t d = 0; d < out.drops; ++d) evaluate_one_drop(spec, inputs, d, out);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t d = next++; d < out.drops; d = next++) {
          try {
            evaluate_one_drop(spec, inputs, d, out);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double pairwise_sum(const double* values, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += values[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, n - half);
}

std::vector<SweepRow> aggregate(const SweepSpec& spec, const SweepOutcomes& o) {
  std::vector<SweepRow> rows;
  std::vector<double> energies, durations, floors;
  energies.reserve(o.drops);
  durations.reserve(o.drops);
  floors.reserve(o.drops);
  for (std::size_t si = 0; si < o.schemes; ++si) {
    for (std::size_t ci = 0; ci < o.csi; ++ci) {
      for (std::size_t pi = 0; pi < o.pa; ++pi) {
        for (std::size_t pt = 0; pt < o.points; ++pt) {
          SweepRow row;
          row.se = spec.se_points[pt];
          row.scheme = spec.schemes[si];
          row.csi = spec.csi_modes[ci];
          row.pa = spec.pa_models[pi];
          row.drops_total = o.drops;
          energies.clear();
          durations.clear();
          floors.clear();
          for (std::size_t d = 0; d < o.drops; ++d) {
            const DropOutcome& c = o.at(d, pt, si, ci, pi);
            if (!c.feasible) continue;
            energies.push_back(c.energy);
            durations.push_back(c.t_star);
            floors.push_back(c.idle_floor);
            if (c.at_floor) ++row.floor_clamped;
            if (c.at_frame) ++row.frame_clamped;
          }
          row.drops_used = energies.size();
          row.infeasible_fraction =
              static_cast<double>(o.drops - row.drops_used) / static_cast<double>(o.drops);
          if (row.drops_used == 0) {
            row.mean_energy = row.mean_t_star = row.mean_idle_floor =
                std::numeric_limits<double>::quiet_NaN();
          } else {
            const double n = static_cast<double>(row.drops_used);
            row.mean_energy = pairwise_sum(energies.data(), energies.size()) / n;
            row.mean_t_star = pairwise_sum(durations.data(), durations.size()) / n;
            row.mean_idle_floor = pairwise_sum(floors.data(), floors.size()) / n;
          }
          rows.push_back(row);
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tuple(static_cast<int>(a.scheme), static_cast<int>(a.csi),
                      static_cast<int>(a.pa), a.se) <
           std::tuple(static_cast<int>(b.scheme), static_cast<int>(b.csi),
                      static_cast<int>(b.pa), b.se);
  });
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepInputs& inputs) {
  return aggregate(spec, evaluate_sweep(spec, inputs));
}

std::vector<DurationSeries> duration_curve(const std::vector<SweepRow>& rows,
                                           double frame) {
  std::vector<DurationSeries> out;
  for (const SweepRow& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const DurationSeries& s) {
      return s.scheme == r.scheme && s.csi == r.csi && s.pa == r.pa;
    });
    if (it == out.end()) {
      out.push_back({r.scheme, r.csi, r.pa, {}, {}, std::nullopt});
      it = std::prev(out.end());
    }
    it->se.push_back(r.se);
    it->t_star.push_back(r.mean_t_star);
    if (!it->saturation_se && r.drops_used > 0 && r.mean_t_star >= frame * (1.0 - 1e-9)) {
      it->saturation_se = r.se;
    }
  }
  return out;
}

std::vector<PaComparison> compare_pa_models(const std::vector<SweepRow>& rows) {
  std::map<std::tuple<int, int, double>, std::pair<const SweepRow*, const SweepRow*>> pairs;
  for (const SweepRow& r : rows) {
    auto& slot = pairs[{static_cast<int>(r.scheme), static_cast<int>(r.csi), r.se}];
    (r.pa == PaModel::Tpa ? slot.first : slot.second) = &r;
  }
  std::vector<PaComparison> out;
  for (const auto& [key, pr] : pairs) {
    if (!pr.first || !pr.second) continue;
    const auto scheme = static_cast<SchemeTag>(std::get<0>(key));
    const auto csi = static_cast<CsiMode>(std::get<1>(key));
    auto it = std::find_if(out.begin(), out.end(), [&](const PaComparison& c) {
      return c.scheme == scheme && c.csi == csi;
    });
    if (it == out.end()) {
      out.push_back({scheme, csi, {}, {}, {}, true});
      it = std::prev(out.end());
    }
    it->se.push_back(std::get<2>(key));
    it->energy_tpa.push_back(pr.first->mean_energy);
    it->energy_ipa.push_back(pr.second->mean_energy);
    if (!(pr.second->mean_energy <= pr.first->mean_energy)) it->ipa_dominates = false;
  }
  return out;
}

}  // namespace greenhcn
