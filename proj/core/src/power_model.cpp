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

#include "greenhcn/power_model.hpp"

#include <algorithm>
#include <cmath>

#include "greenhcn/errors.hpp"

namespace greenhcn {

void BsProfile::validate() const {
  if (!(max_power > 0.0)) throw ContractError("bs.max_power must be > 0");
  if (!(max_efficiency > 0.0 && max_efficiency <= 1.0)) {
    throw ContractError("bs.max_efficiency must lie in (0, 1]");
  }
  if (ipa_efficiency && !(*ipa_efficiency > 0.0 && *ipa_efficiency <= 1.0)) {
    throw ContractError("bs.ipa_efficiency must lie in (0, 1]");
  }
  if (!(idle_power >= 0.0)) throw ContractError("bs.idle_power must be >= 0");
  if (!(static_power >= idle_power)) {
    throw ContractError("bs.static_power must be >= bs.idle_power");
  }
  if (!(dynamic_factor >= 0.0)) {
    throw ContractError("bs.dynamic_factor must be >= 0");
  }
}

void UeProfile::validate() const {
  if (!(idle_power >= 0.0)) throw ContractError("ue.idle_power must be >= 0");
  if (!(static_power >= idle_power)) {
    throw ContractError("ue.static_power must be >= ue.idle_power");
  }
  if (!(dynamic_factor >= 0.0)) {
    throw ContractError("ue.dynamic_factor must be >= 0");
  }
}

bool Allocation::is_active() const {
  return duration > 0.0 &&
         std::any_of(powers.begin(), powers.end(), [](double p) { return p > 0.0; });
}

std::size_t Allocation::active_count() const {
  return static_cast<std::size_t>(
      std::count_if(powers.begin(), powers.end(), [](double p) { return p > 0.0; }));
}

double pa_consumption(double p, const BsProfile& profile, PaModel model) {
  if (!(p >= 0.0) || p > profile.max_power) {
    throw DomainError("transmit power outside [0, P_max]");
  }
  if (model == PaModel::Tpa) {
    return std::sqrt(p * profile.max_power) / profile.max_efficiency;
  }
  return p / profile.ipa_eff();
}

double tx_power(double p, double rate, const BsProfile& profile, PaModel model) {
  if (!(rate >= 0.0)) throw DomainError("rate must be >= 0");
  return pa_consumption(p, profile, model) + profile.dynamic_factor * rate +
         profile.static_power;
}

double rx_power(double rate, const UeProfile& ue) {
  if (!(rate >= 0.0)) throw DomainError("rate must be >= 0");
  return ue.dynamic_factor * rate + ue.static_power;
}

namespace {

void check_allocation(const Allocation& alloc, const DemandSpec& demand,
                      std::span<const BsProfile> profiles) {
  if (alloc.powers.size() != profiles.size()) {
    throw ContractError("allocation/profile length mismatch");
  }
  if (!(alloc.duration >= 0.0 && alloc.duration <= demand.frame)) {
    throw ContractError("allocation duration outside [0, T]");
  }
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    if (!(alloc.powers[m] >= 0.0) || alloc.powers[m] > profiles[m].max_power) {
      throw ContractError("allocation power outside [0, P_max]");
    }
  }
}

}  // namespace

double idle_frame_energy(const DemandSpec& demand,
                         std::span<const BsProfile> profiles,
                         const UeProfile& ue) {
  double idle = 0.0;
  for (const auto& bs : profiles) idle += bs.idle_power;
  return demand.frame * (idle + ue.idle_power);
}

EnergyReport frame_energy(const Allocation& alloc, const DemandSpec& demand,
                          std::span<const BsProfile> profiles,
                          const UeProfile& ue, PaModel model) {
  check_allocation(alloc, demand, profiles);
  const double T = demand.frame;
  const bool active = alloc.is_active();
  const double t = active ? alloc.duration : 0.0;

  EnergyReport e;
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    const BsProfile& bs = profiles[m];
    if (active && alloc.powers[m] > 0.0) {
      e.pa += pa_consumption(alloc.powers[m], bs, model) * t;
      e.dynamic_circuit += bs.dynamic_factor * demand.rate * t;
      e.static_circuit += bs.static_power * t;
      e.idle += bs.idle_power * (T - t);
    } else {
      e.idle += bs.idle_power * T;
    }
  }
  e.ue = active ? rx_power(demand.rate, ue) * t + ue.idle_power * (T - t)
                : ue.idle_power * T;
  e.total = e.pa + e.dynamic_circuit + e.static_circuit + e.idle + e.ue;
  return e;
}

double incremental_energy(const Allocation& alloc, const DemandSpec& demand,
                          std::span<const BsProfile> profiles,
                          const UeProfile& ue, PaModel model) {
  check_allocation(alloc, demand, profiles);
  if (!alloc.is_active()) return 0.0;
  const double t = alloc.duration;
  double rate_terms = 0.0;
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    if (alloc.powers[m] > 0.0) {
      const BsProfile& bs = profiles[m];
      rate_terms += pa_consumption(alloc.powers[m], bs, model) +
                    (bs.dynamic_factor * demand.rate + bs.static_power -
                     bs.idle_power);
    }
  }
  rate_terms += ue.dynamic_factor * demand.rate + ue.static_power - ue.idle_power;
  return rate_terms * t;
}

}  // namespace greenhcn
