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

#include <optional>
#include <span>
#include <vector>

#include "greenhcn/scenario.hpp"

namespace greenhcn {

/// Static hardware parameters of one BS.
struct BsProfile {
  double max_power = 39.810717055349734;  // W, P_max (46 dBm)
  double max_efficiency = 0.35;           // eta_max
  double static_power = 0.050;            // W, P_base
  double idle_power = 0.030;              // W, P_idle
  double dynamic_factor = 5e-9;           // W per bit/s, epsilon
  std::optional<double> ipa_efficiency;   // defaults to max_efficiency

  double ipa_eff() const { return ipa_efficiency.value_or(max_efficiency); }
  void validate() const;
};

struct UeProfile {
  double static_power = 0.020;   // W
  double idle_power = 0.010;     // W
  double dynamic_factor = 2e-9;  // W per bit/s
  void validate() const;
};

enum class PaModel { Tpa, Ipa };

/// A candidate decision for one frame. powers[m] == 0 means BS m idles on
/// this resource.
struct Allocation {
  std::vector<double> powers;  // W, one per candidate BS
  double duration = 0.0;       // s, t

  bool is_active() const;
  std::size_t active_count() const;
};

/// Frame energy split by consumer. All values in joules.
struct EnergyReport {
  double pa = 0.0;
  double dynamic_circuit = 0.0;
  double static_circuit = 0.0;
  double idle = 0.0;  // BS idle energy
  double ue = 0.0;    // reception plus UE idle
  double total = 0.0;
};

/// Power drawn by the amplifier to radiate p watts.
///   Tpa: sqrt(p * P_max) / eta_max
///   Ipa: p / eta_ipa
double pa_consumption(double p, const BsProfile& profile, PaModel model);

/// BS transmit-mode power: PA + eps * r + P_base.
double tx_power(double p, double rate, const BsProfile& profile, PaModel model);

/// UE receive-mode power: eps_u * r + P_base,u.
double rx_power(double rate, const UeProfile& ue);

/// Energy of one frame. A BS with p_m > 0 transmits for t and idles for
/// T - t; a BS with p_m = 0 idles the whole frame. The frame is idle
/// altogether (UE included) when no BS transmits or t = 0.
EnergyReport frame_energy(const Allocation& alloc, const DemandSpec& demand,
                          std::span<const BsProfile> profiles,
                          const UeProfile& ue, PaModel model);

/// Energy of a frame in which nobody transmits: T (sum P_idle,m + P_idle,u).
double idle_frame_energy(const DemandSpec& demand,
                         std::span<const BsProfile> profiles,
                         const UeProfile& ue);

/// Energy above the all-idle frame: only the t-proportional active terms.
double incremental_energy(const Allocation& alloc, const DemandSpec& demand,
                          std::span<const BsProfile> profiles,
                          const UeProfile& ue, PaModel model);

}  // namespace greenhcn
