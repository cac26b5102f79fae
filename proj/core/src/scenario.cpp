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

#include "greenhcn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "greenhcn/errors.hpp"

namespace greenhcn {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void Geometry::validate() const {
  if (!(area_side > 0.0) || !std::isfinite(area_side)) {
    throw ContractError("geometry.area_side must be > 0");
  }
  if (!(bs_density > 0.0) || !std::isfinite(bs_density)) {
    throw ContractError("geometry.bs_density must be > 0");
  }
}

ChannelState ChannelState::from_amplitude(double gain_amp) {
  if (!(gain_amp >= 0.0) || !std::isfinite(gain_amp)) {
    throw DomainError("channel amplitude must be finite and >= 0");
  }
  return ChannelState(gain_amp);
}

ChannelState ChannelState::from_power(double gain_pow) {
  if (!(gain_pow >= 0.0) || !std::isfinite(gain_pow)) {
    throw DomainError("channel power gain must be finite and >= 0");
  }
  return ChannelState(std::sqrt(gain_pow));
}

void DemandSpec::validate() const {
  if (!(rate > 0.0)) throw ContractError("demand.rate must be > 0");
  if (!(frame > 0.0)) throw ContractError("demand.frame must be > 0");
  if (!(bandwidth > 0.0)) throw ContractError("demand.bandwidth must be > 0");
  if (!(noise_psd >= 0.0)) throw ContractError("demand.noise_psd must be >= 0");
  if (!(interference >= 0.0)) {
    throw ContractError("demand.interference must be >= 0");
  }
  if (!(noise_plus_interference() > 0.0)) {
    throw ContractError("demand: noise plus interference must be > 0");
  }
}

double path_loss_db(double d) {
  if (!(d > 0.0)) throw DomainError("path loss needs a positive distance");
  return 103.8 + 21.0 * std::log10(d);
}

double PathLossModel::loss_db(double distance_m) const {
  if (!(distance_m > 0.0)) {
    throw DomainError("path loss needs a positive distance");
  }
  double d = std::max(distance_m, min_distance);
  if (unit == DistanceUnit::Kilometers) d *= 1e-3;
  return intercept_db + slope_db * std::log10(d);
}

ChannelState channel_with_fading(double distance_m, double fading_power,
                                 const PathLossModel& model) {
  if (!(fading_power >= 0.0)) throw DomainError("fading power must be >= 0");
  const double large_scale = std::pow(10.0, -model.loss_db(distance_m) / 10.0);
  return ChannelState::from_power(large_scale * fading_power);
}

ChannelState draw_channel(double distance_m, Engine& rng,
                          const PathLossModel& model) {
  std::exponential_distribution<double> fading(1.0);
  return channel_with_fading(distance_m, fading(rng), model);
}

std::vector<Point> deploy_ppp(const Geometry& geometry, std::uint64_t seed) {
  geometry.validate();
  Engine rng = make_engine(seed);
  const double mean = geometry.bs_density * geometry.area_km2();
  std::poisson_distribution<std::uint64_t> count_dist(mean);
  const std::uint64_t count = count_dist(rng);

  const double half = geometry.area_side / 2.0;
  std::uniform_real_distribution<double> coord(-half, half);
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    out.push_back({x, y});
  }
  return out;
}

double received_signal_power(std::span<const double> powers,
                             std::span<const ChannelState> channels,
                             CsiMode mode) {
  if (powers.size() != channels.size()) {
    throw ContractError("received_signal_power: powers/channels length mismatch");
  }
  if (mode == CsiMode::LongTerm) {
    double s = 0.0;
    for (std::size_t m = 0; m < powers.size(); ++m) {
      if (!(powers[m] >= 0.0)) throw ContractError("transmit power must be >= 0");
      s += powers[m] * channels[m].gain_pow();
    }
    return s;
  }
  double amp = 0.0, single = 0.0;
  std::size_t active = 0;
  for (std::size_t m = 0; m < powers.size(); ++m) {
    if (!(powers[m] >= 0.0)) throw ContractError("transmit power must be >= 0");
    if (powers[m] > 0.0) {
      ++active;
      single = powers[m] * channels[m].gain_pow();
    }
    amp += std::sqrt(powers[m]) * channels[m].gain_amp();
  }
  // One transmitter: coherent combining is the plain received power.
  return active == 1 ? single : amp * amp;
}

double achievable_rate(double t, const DemandSpec& demand, double signal) {
  if (!(t >= 0.0 && t <= demand.frame)) {
    throw ContractError("achievable_rate: t must lie in [0, T]");
  }
  if (!(signal >= 0.0)) throw ContractError("achievable_rate: S must be >= 0");
  const double snr = signal / demand.noise_plus_interference();
  return (t / demand.frame) * demand.bandwidth * std::log1p(snr) /
         std::numbers::ln2;
}

Drop build_drop(const Geometry& geometry, const DemandSpec& demand,
                const DropConfig& config, std::uint64_t seed) {
  demand.validate();
  Drop drop;
  drop.bs_positions = deploy_ppp(geometry, derive_seed(seed, 0));
  const std::size_t n = drop.bs_positions.size();
  if (n == 0) throw DropRejected("no base station deployed");

  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = distance(drop.bs_positions[i], geometry.ue);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

  // Channels are drawn for every BS in index order so the realization does
  // not depend on the candidate rule.
  Engine rng = make_engine(derive_seed(seed, 1));
  std::vector<ChannelState> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = draw_channel(dist[i], rng, config.path_loss);
  }

  std::vector<bool> is_candidate(n, false);
  if (config.rule == CandidateRule::KNearest) {
    const std::size_t k = config.k_nearest.k;
    if (k == 0) throw ContractError("k_nearest.k must be >= 1");
    if (n < k) {
      throw DropRejected("only " + std::to_string(n) + " BSs deployed, " +
                         std::to_string(k) + " required");
    }
    for (std::size_t j = 0; j < k; ++j) is_candidate[order[j]] = true;
  } else {
    const double floor_w = demand.noise_power();
    for (std::size_t i : order) {
      const double mean_gain =
          std::pow(10.0, -config.path_loss.loss_db(dist[i]) / 10.0);
      const double snr_db = 10.0 * std::log10(
          config.snr_threshold.reference_power * mean_gain / floor_w);
      if (snr_db >= config.snr_threshold.threshold_db) is_candidate[i] = true;
    }
  }

  for (std::size_t i : order) {
    if (is_candidate[i]) {
      drop.candidates.push_back(i);
      drop.channels.push_back(all[i]);
    }
  }
  if (drop.candidates.empty()) throw DropRejected("empty candidate set");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_candidate[i]) {
      drop.interferers.push_back(i);
      drop.interferer_channels.push_back(all[i]);
    }
  }

  drop.demand = demand;
  if (config.interference == InterferenceMode::Computed) {
    double i_out = 0.0;
    for (const auto& ch : drop.interferer_channels) {
      i_out += config.activity_factor * config.interferer_power * ch.gain_pow();
    }
    drop.demand.interference = i_out;
  }
  return drop;
}

}  // namespace greenhcn
