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

#include <filesystem>
#include <string>
#include <string_view>

#include "greenhcn/montecarlo.hpp"
#include "greenhcn/optimizer.hpp"
#include "greenhcn/oracle.hpp"
#include "greenhcn/power_model.hpp"
#include "greenhcn/scenario.hpp"

namespace greenhcn {

struct OutputConfig {
  std::string dir = "out";
  bool svg = true;
};

/// Fully resolved run configuration, in SI units.
struct RunConfig {
  Geometry geometry;
  DemandSpec demand;
  DropConfig drop;
  BsProfile bs;
  UeProfile ue;
  SweepSpec sweep;
  SearchConfig search;
  OracleGrid oracle;
  OutputConfig output;

  SweepInputs sweep_inputs() const;
};

/// Defaults for every field (the simulation-parameter table plus the
/// library defaults documented in README.md).
RunConfig default_config();

/// Parses the JSON config format (comments allowed). Empty text yields the
/// defaults. Throws ConfigError with a line number for syntax errors and the
/// dotted field name for invalid values or unknown keys.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path& path);

/// Serializes back to the JSON format, in engineering units.
std::string dump_config(const RunConfig& config);

/// Applies GREENHCN_SEED (master seed override) when set.
void apply_environment(RunConfig& config);

SchemeTag parse_scheme(std::string_view name);
CsiMode parse_csi(std::string_view name);
PaModel parse_pa(std::string_view name);

}  // namespace greenhcn
