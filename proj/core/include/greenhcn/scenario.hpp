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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "greenhcn/rng.hpp"

namespace greenhcn {

struct Point {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

double distance(Point a, Point b);

/// Square research area centered on the origin, with the typical UE inside.
struct Geometry {
  double area_side = 300.0;        // m
  double bs_density = 20.0;        // BS per km^2
  Point ue{};                      // m, area center by default

  double area_km2() const { return area_side * area_side * 1e-6; }
  void validate() const;
};

/// Magnitude of the complex channel gain of one BS-UE link. The phase is
/// never stored: it only matters through the CSI-mode branch of the received
/// power.
class ChannelState {
 public:
  ChannelState() = default;

  static ChannelState from_amplitude(double gain_amp);
  /// Stores sqrt(gain_pow); gain_pow() then returns the square of that
  /// amplitude, which may differ from the argument by one ulp.
  static ChannelState from_power(double gain_pow);

  double gain_amp() const { return amp_; }
  double gain_pow() const { return pow_; }

 private:
  explicit ChannelState(double amp) : amp_(amp), pow_(amp * amp) {}

  double amp_ = 0.0;
  double pow_ = 0.0;
};

enum class CsiMode { LongTerm, ShortTerm };

/// Service contract for the typical UE in one frame.
struct DemandSpec {
  double rate = 10e6;            // bit/s, r_dl
  double frame = 10e-3;          // s, T
  double bandwidth = 10e6;       // Hz, W
  double noise_psd = 3.981071705534973e-21;  // W/Hz, -174 dBm/Hz
  double interference = 0.0;     // W, out-of-cluster I_out

  double noise_power() const { return noise_psd * bandwidth; }
  double noise_plus_interference() const {
    return interference + noise_power();
  }
  double spectral_efficiency() const { return rate / bandwidth; }
  void validate() const;
};

enum class DistanceUnit { Meters, Kilometers };

/// Mean path loss L(d) = intercept + slope * log10(d), d in `unit`.
struct PathLossModel {
  double intercept_db = 103.8;
  double slope_db = 21.0;
  DistanceUnit unit = DistanceUnit::Meters;
  double min_distance = 1.0;  // m; shorter links are clamped here

  double loss_db(double distance_m) const;
};

/// 103.8 + 21 log10(d). Throws DomainError for d <= 0.
double path_loss_db(double d);

/// Channel for a link of length `distance_m` with a given small-scale power
/// fading draw (unit mean for Rayleigh).
ChannelState channel_with_fading(double distance_m, double fading_power,
                                 const PathLossModel& model = {});

/// Path loss plus Rayleigh block fading (exponential unit-mean power).
ChannelState draw_channel(double distance_m, Engine& rng,
                          const PathLossModel& model = {});

/// Homogeneous PPP over the square: Poisson count, i.i.d. uniform positions.
std::vector<Point> deploy_ppp(const Geometry& geometry, std::uint64_t seed);

/// Received useful power. LongTerm sums powers; ShortTerm combines
/// amplitudes coherently (identical to LongTerm with one transmitter).
double received_signal_power(std::span<const double> powers,
                             std::span<const ChannelState> channels,
                             CsiMode mode);

/// (t/T) W log2(1 + S / (I_out + P_N)).
double achievable_rate(double t, const DemandSpec& demand, double signal);

struct KNearest {
  std::size_t k = 3;
};

/// Every BS whose large-scale SNR at `reference_power` reaches the threshold.
struct SnrThreshold {
  double threshold_db = 0.0;
  double reference_power = 39.810717055349734;  // W
};

enum class CandidateRule { KNearest, SnrThreshold };

enum class InterferenceMode { Constant, Computed };

struct DropConfig {
  CandidateRule rule = CandidateRule::KNearest;
  KNearest k_nearest{};
  SnrThreshold snr_threshold{};

  // Constant mode keeps DemandSpec::interference as configured.
  InterferenceMode interference = InterferenceMode::Constant;
  double activity_factor = 1.0;               // computed mode
  double interferer_power = 39.810717055349734;  // W, computed mode

  PathLossModel path_loss{};
};

/// One Monte Carlo realization. Immutable once built.
struct Drop {
  std::vector<Point> bs_positions;
  std::vector<std::size_t> candidates;   // indices into bs_positions
  std::vector<ChannelState> channels;    // aligned with candidates
  std::vector<std::size_t> interferers;  // remaining BS indices
  std::vector<ChannelState> interferer_channels;
  DemandSpec demand;                     // I_out resolved for this drop
};

/// Deploys BSs, picks the candidate set and draws all channels. Candidates
/// are ordered by increasing distance (ties by BS index). Throws
/// DropRejected when the rule cannot be met.
Drop build_drop(const Geometry& geometry, const DemandSpec& demand,
                const DropConfig& config, std::uint64_t seed);

}  // namespace greenhcn
