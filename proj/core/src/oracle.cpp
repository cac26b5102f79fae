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

#include "greenhcn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "greenhcn/errors.hpp"

namespace greenhcn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlackTol = 1e-12;
constexpr std::size_t kPolishSamples = 48;
constexpr std::size_t kPolishGolden = 50;
constexpr std::size_t kFaceSamples = 2000;

class OracleSearch {
 public:
  OracleSearch(const Problem& problem, CsiMode csi, const OracleGrid& grid)
      : problem_(problem), csi_(csi), grid_(grid), n_(problem.size()) {
    const DemandSpec& d = problem.demand;
    floor_ = d.noise_plus_interference();
    ue_delta_ = problem.ue.dynamic_factor * d.rate + problem.ue.static_power -
                problem.ue.idle_power;
    for (const auto& bs : problem.profiles) {
      circuit_.push_back(bs.dynamic_factor * d.rate + bs.static_power -
                         bs.idle_power);
    }
  }

  // Signal the UE needs during t to receive r_dl bits per frame.
  double required_signal(double t) const {
    const DemandSpec& d = problem_.demand;
    return floor_ * (std::exp2(d.frame * d.rate / (d.bandwidth * t)) - 1.0);
  }

  double power_cost(std::size_t m, double p) const {
    return p > 0.0 ? pa_consumption(p, problem_.profiles[m], problem_.pa) + circuit_[m]
                   : 0.0;
  }

  // Best grid cell as (powers, t). Returns false when nothing is feasible.
  bool grid_search(std::vector<double>& powers, double& t) const {
    const std::size_t levels = grid_.power_points + 1;
    std::vector<std::vector<double>> p(n_), cost(n_), contrib(n_);
    for (std::size_t m = 0; m < n_; ++m) {
      const BsProfile& bs = problem_.profiles[m];
      const ChannelState& ch = problem_.channels[m];
      for (std::size_t j = 0; j < levels; ++j) {
        double v = 0.0;
        if (j > 0) {
          const double frac = grid_.power_points == 1
                                  ? 0.0
                                  : static_cast<double>(grid_.power_points - j) /
                                        static_cast<double>(grid_.power_points - 1);
          v = j == grid_.power_points
                  ? bs.max_power
                  : bs.max_power * std::pow(10.0, -grid_.power_span_decades * frac);
        }
        p[m].push_back(v);
        cost[m].push_back(power_cost(m, v));
        contrib[m].push_back(csi_ == CsiMode::LongTerm ? v * ch.gain_pow()
                                                       : std::sqrt(v) * ch.gain_amp());
      }
    }

    double best = kInf;
    std::vector<std::size_t> idx(n_, 0), best_idx;
    double best_t = 0.0;
    const double T = problem_.demand.frame;
    for (std::size_t k = 1; k <= grid_.duration_points; ++k) {
      const double tk = T * static_cast<double>(k) /
                        static_cast<double>(grid_.duration_points);
      const double need = required_signal(tk);
      if (!std::isfinite(need)) continue;
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        std::size_t active = 0;
        double sum = 0.0, c = 0.0;
        for (std::size_t m = 0; m < n_; ++m) {
          if (idx[m] > 0) ++active;
          sum += contrib[m][idx[m]];
          c += cost[m][idx[m]];
        }
        const double s = csi_ == CsiMode::LongTerm ? sum : sum * sum;
        if (active >= std::max<std::size_t>(grid_.min_active, 1) && s >= need) {
          const double e = (c + ue_delta_) * tk;
          if (e < best) {
            best = e;
            best_idx = idx;
            best_t = tk;
          }
        }
        std::size_t m = 0;
        while (m < n_ && ++idx[m] == levels) idx[m++] = 0;
        if (m == n_) break;
      }
    }
    if (!std::isfinite(best)) return false;
    powers.resize(n_);
    for (std::size_t m = 0; m < n_; ++m) powers[m] = p[m][best_idx[m]];
    t = best_t;
    return true;
  }

  // Sets p[k] to the least power that meets the rate together with the
  // others and returns the incremental energy, or +inf if infeasible.
  double with_slack(std::vector<double>& p, double t, std::size_t k) const {
    const double T = problem_.demand.frame;
    if (!(t > 0.0 && t <= T)) return kInf;
    const double need = required_signal(t);
    if (!std::isfinite(need)) return kInf;
    const ChannelState& ck = problem_.channels[k];
    double pk = 0.0;
    if (csi_ == CsiMode::LongTerm) {
      double rest = 0.0;
      for (std::size_t m = 0; m < n_; ++m) {
        if (m != k) rest += p[m] * problem_.channels[m].gain_pow();
      }
      const double resid = need - rest;
      if (resid > kSlackTol * need) {
        if (!(ck.gain_pow() > 0.0)) return kInf;
        pk = resid / ck.gain_pow();
      }
    } else {
      double rest = 0.0;
      for (std::size_t m = 0; m < n_; ++m) {
        if (m != k) rest += std::sqrt(p[m]) * problem_.channels[m].gain_amp();
      }
      const double root = std::sqrt(need);
      const double resid = root - rest;
      if (resid > kSlackTol * root) {
        if (!(ck.gain_amp() > 0.0)) return kInf;
        const double x = resid / ck.gain_amp();
        pk = x * x;
      }
    }
    if (pk > problem_.profiles[k].max_power) return kInf;
    p[k] = pk;
    return energy(p, t);
  }

  double energy(const std::vector<double>& p, double t) const {
    std::size_t active = 0;
    double c = 0.0;
    for (std::size_t m = 0; m < n_; ++m) {
      if (p[m] > 0.0) {
        if (p[m] > problem_.profiles[m].max_power) return kInf;
        ++active;
        c += power_cost(m, p[m]);
      }
    }
    if (active == 0 || active < grid_.min_active) return kInf;
    return (c + ue_delta_) * t;
  }

  // Power of BS m that alone (with the non-slack others) meets the rate,
  // making the slack BS k unnecessary.
  double zeroing_power(const std::vector<double>& p, double t, std::size_t k,
                       std::size_t m) const {
    const double need = required_signal(t);
    const ChannelState& cm = problem_.channels[m];
    double rest = 0.0;
    if (csi_ == CsiMode::LongTerm) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != k && j != m) rest += p[j] * problem_.channels[j].gain_pow();
      }
      return cm.gain_pow() > 0.0 ? (need - rest) / cm.gain_pow() : kInf;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != k && j != m) rest += std::sqrt(p[j]) * problem_.channels[j].gain_amp();
    }
    if (!(cm.gain_amp() > 0.0)) return kInf;
    const double x = (std::sqrt(need) - rest) / cm.gain_amp();
    return x > 0.0 ? x * x : 0.0;
  }

  void polish(std::vector<double>& p, double& t) const {
    double cur = energy(p, t);
    for (std::size_t round = 0; round < grid_.polish_rounds; ++round) {
      const double start = cur;
      for (std::size_t k = 0; k < n_; ++k) {
        try_accept(p, t, cur, p, t, k);

        // duration
        {
          auto f = [&](double x) {
            std::vector<double> q = p;
            return with_slack(q, x, k);
          };
          std::vector<double> cand{t, problem_.demand.frame};
          for (std::size_t i = 1; i <= kPolishSamples; ++i) {
            cand.push_back(problem_.demand.frame * static_cast<double>(i) /
                           static_cast<double>(kPolishSamples));
          }
          const double x = minimize_1d(f, cand);
          try_accept(p, t, cur, p, x, k);
        }

        // other powers
        for (std::size_t m = 0; m < n_; ++m) {
          if (m == k) continue;
          const double cap = problem_.profiles[m].max_power;
          auto f = [&](double v) {
            if (!(v >= 0.0 && v <= cap)) return kInf;
            std::vector<double> q = p;
            q[m] = v;
            return with_slack(q, t, k);
          };
          std::vector<double> cand{0.0, cap, p[m]};
          const double z = zeroing_power(p, t, k, m);
          if (z >= 0.0 && z <= cap) cand.push_back(z);
          for (std::size_t i = 0; i < kPolishSamples; ++i) {
            const double frac = static_cast<double>(i) /
                                static_cast<double>(kPolishSamples - 1);
            cand.push_back(cap * std::pow(10.0, -12.0 * (1.0 - frac)));
          }
          const double v = minimize_1d(f, cand);
          std::vector<double> q = p;
          q[m] = v;
          try_accept(p, t, cur, q, t, k);
        }
      }
      if (!(cur < start - 1e-14 * std::abs(start))) break;
    }
  }

  // Dense duration search on each single-BS face of the feasible set.
  void single_bs_faces(std::vector<double>& p, double& t) const {
    if (grid_.min_active > 1) return;
    double cur = energy(p, t);
    const DemandSpec& d = problem_.demand;
    for (std::size_t m = 0; m < n_; ++m) {
      const double g = problem_.channels[m].gain_pow();
      const double lo =
          d.frame * d.rate /
          (d.bandwidth * std::log2(1.0 + problem_.profiles[m].max_power * g / floor_));
      if (!(lo <= d.frame)) continue;
      auto f = [&](double x) {
        std::vector<double> q(n_, 0.0);
        return with_slack(q, x, m);
      };
      std::vector<double> cand{lo * (1.0 + 1e-12), d.frame};
      for (std::size_t i = 1; i < kFaceSamples; ++i) {
        cand.push_back(lo + (d.frame - lo) * static_cast<double>(i) /
                                static_cast<double>(kFaceSamples));
      }
      const double x = minimize_1d(f, cand);
      std::vector<double> q(n_, 0.0);
      const double e = with_slack(q, x, m);
      if (e < cur) {
        cur = e;
        p = std::move(q);
        t = x;
      }
    }
  }

 private:
  void try_accept(std::vector<double>& p, double& t, double& cur,
                  const std::vector<double>& cand_p, double cand_t,
                  std::size_t k) const {
    std::vector<double> q = cand_p;
    const double e = with_slack(q, cand_t, k);
    if (e < cur) {
      cur = e;
      p = std::move(q);
      t = cand_t;
    }
  }

  template <class F>
  static double minimize_1d(F&& f, std::vector<double> cand) {
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t bi = 0;
    double bv = kInf;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const double v = f(cand[i]);
      if (v < bv) {
        bv = v;
        bi = i;
      }
    }
    if (!std::isfinite(bv)) return cand[bi];
    double best_x = cand[bi];
    double a = cand[bi == 0 ? 0 : bi - 1];
    double b = cand[bi + 1 < cand.size() ? bi + 1 : bi];
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (std::size_t it = 0; it < kPolishGolden; ++it) {
      if (fc < bv) { bv = fc; best_x = c; }
      if (fd < bv) { bv = fd; best_x = d; }
      if (fc <= fd) {
        b = d; d = c; fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    if (fc < bv) { bv = fc; best_x = c; }
    if (fd < bv) { best_x = d; }
    return best_x;
  }

  const Problem& problem_;
  CsiMode csi_;
  OracleGrid grid_;
  std::size_t n_;
  double floor_ = 0.0;
  double ue_delta_ = 0.0;
  std::vector<double> circuit_;
};

}  // namespace

OracleResult brute_force_oracle(const Problem& problem, CsiMode csi,
                                const OracleGrid& grid) {
  problem.validate();
  if (problem.size() > 3) {
    throw ContractError("brute_force_oracle handles at most 3 candidates");
  }
  if (grid.power_points < 1 || grid.duration_points < 1) {
    throw ContractError("oracle grid must have at least one point per axis");
  }
  if (grid.min_active > problem.size()) {
    throw ContractError("oracle min_active exceeds candidate count");
  }

  OracleSearch search(problem, csi, grid);
  std::vector<double> powers;
  double t = 0.0;
  if (!search.grid_search(powers, t)) {
    throw InfeasibleError(Infeasibility::Demand, "no rate-feasible oracle cell");
  }

  OracleResult out;
  const double idle = idle_frame_energy(problem.demand, problem.profiles, problem.ue);
  out.grid_energy = search.energy(powers, t) + idle;

  search.polish(powers, t);
  search.single_bs_faces(powers, t);
  out.allocation.powers = powers;
  out.allocation.duration = t;
  out.energy = frame_energy(out.allocation, problem.demand, problem.profiles,
                            problem.ue, problem.pa);
  out.active_count = out.allocation.active_count();
  return out;
}

}  // namespace greenhcn
