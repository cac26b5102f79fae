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

// Engineering-unit conversions. Everything inside the library is SI
// (W, s, Hz, bit/s); these helpers are used only at config ingestion and
// report emission.

namespace greenhcn::units {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double ratio);

constexpr double milliwatts(double mw) { return mw * 1e-3; }
constexpr double megahertz(double mhz) { return mhz * 1e6; }
constexpr double milliseconds(double ms) { return ms * 1e-3; }
constexpr double mbps(double rate) { return rate * 1e6; }

/// mW/Mbps -> W per bit/s.
constexpr double mw_per_mbps(double v) { return v * 1e-9; }

/// dBm/Hz -> W/Hz.
double dbm_per_hz_to_watts_per_hz(double dbm_per_hz);

}  // namespace greenhcn::units
