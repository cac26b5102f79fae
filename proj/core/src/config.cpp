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

#include "greenhcn/config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "greenhcn/errors.hpp"
#include "greenhcn/units.hpp"

namespace greenhcn {

using nlohmann::json;

SweepInputs RunConfig::sweep_inputs() const {
  return {geometry, demand, drop, bs, ue, search};
}

RunConfig default_config() {
  RunConfig c;
  c.demand.bandwidth = units::megahertz(10.0);
  c.demand.frame = units::milliseconds(10.0);
  c.demand.noise_psd = units::dbm_per_hz_to_watts_per_hz(-174.0);
  c.demand.rate = units::mbps(10.0);
  c.demand.interference = 0.0;
  c.bs.max_power = units::dbm_to_watts(46.0);
  c.bs.max_efficiency = 0.35;
  c.bs.static_power = units::milliwatts(50.0);
  c.bs.idle_power = units::milliwatts(30.0);
  c.bs.dynamic_factor = units::mw_per_mbps(5.0);
  c.ue.static_power = units::milliwatts(20.0);
  c.ue.idle_power = units::milliwatts(10.0);
  c.ue.dynamic_factor = units::mw_per_mbps(2.0);
  c.drop.snr_threshold.reference_power = c.bs.max_power;
  c.drop.interferer_power = c.bs.max_power;
  c.sweep.se_points = SweepSpec::se_range(0.25, 6.0, 0.25);
  return c;
}

SchemeTag parse_scheme(std::string_view name) {
  for (SchemeTag s : {SchemeTag::ProposedPrecise, SchemeTag::ProposedApprox,
                      SchemeTag::TraditionalMaxRss, SchemeTag::AllAccessUniform}) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) +
                    "' (expected proposed, approx, traditional, all-access)");
}

CsiMode parse_csi(std::string_view name) {
  if (name == "long") return CsiMode::LongTerm;
  if (name == "short") return CsiMode::ShortTerm;
  throw ConfigError("unknown CSI mode '" + std::string(name) + "' (expected long, short)");
}

PaModel parse_pa(std::string_view name) {
  if (name == "tpa") return PaModel::Tpa;
  if (name == "ipa") return PaModel::Ipa;
  throw ConfigError("unknown PA model '" + std::string(name) + "' (expected tpa, ipa)");
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Typed accessors over one JSON object section, reporting dotted names.
class Section {
 public:
  Section(const json& root, std::string name) : name_(std::move(name)) {
    if (root.contains(name_)) {
      obj_ = &root.at(name_);
      if (!obj_->is_object()) throw ConfigError(name_ + " must be an object");
    }
  }

  void allow(std::initializer_list<const char*> keys) const {
    if (!obj_) return;
    for (const auto& [k, v] : obj_->items()) {
      bool ok = false;
      for (const char* a : keys) ok = ok || k == a;
      if (!ok) throw ConfigError("unknown key " + field(k));
    }
  }

  bool has(const char* key) const {
    return obj_ && obj_->contains(key) && !obj_->at(key).is_null();
  }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj_->at(key);
    if (!v.is_number()) throw ConfigError(field(key) + " must be a number");
    return v.get<double>();
  }

  std::uint64_t integer(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj_->at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0 &&
                                   !v.is_number_unsigned())) {
      throw ConfigError(field(key) + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj_->at(key);
    if (!v.is_boolean()) throw ConfigError(field(key) + " must be true or false");
    return v.get<bool>();
  }

  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj_->at(key);
    if (!v.is_string()) throw ConfigError(field(key) + " must be a string");
    return v.get<std::string>();
  }

  std::vector<std::string> strings(const char* key) const {
    std::vector<std::string> out;
    const json& v = obj_->at(key);
    if (!v.is_array()) throw ConfigError(field(key) + " must be an array of strings");
    for (const auto& e : v) {
      if (!e.is_string()) throw ConfigError(field(key) + " must be an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::vector<double> numbers(const char* key) const {
    std::vector<double> out;
    const json& v = obj_->at(key);
    if (!v.is_array()) throw ConfigError(field(key) + " must be an array of numbers");
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(field(key) + " must be an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  std::string field(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const json* obj_ = nullptr;
};

void require(bool ok, const std::string& field, const char* what) {
  if (!ok) throw ConfigError(field + " " + what);
}

void validate(const RunConfig& c) {
  require(c.geometry.area_side > 0.0, "geometry.area_side_m", "must be > 0");
  require(c.geometry.bs_density > 0.0, "geometry.bs_density_per_km2", "must be > 0");
  require(c.demand.bandwidth > 0.0, "demand.bandwidth_mhz", "must be > 0");
  require(c.demand.frame > 0.0, "demand.frame_ms", "must be > 0");
  require(c.demand.rate > 0.0, "demand.rate_mbps", "must be > 0");
  require(c.demand.interference >= 0.0, "interference.constant_mw", "must be >= 0");
  require(c.bs.max_power > 0.0, "bs.max_power_dbm", "must be finite");
  require(c.bs.max_efficiency > 0.0 && c.bs.max_efficiency <= 1.0,
          "bs.max_efficiency", "must lie in (0, 1]");
  require(!c.bs.ipa_efficiency ||
              (*c.bs.ipa_efficiency > 0.0 && *c.bs.ipa_efficiency <= 1.0),
          "bs.ipa_efficiency", "must lie in (0, 1]");
  require(c.bs.idle_power >= 0.0, "bs.idle_power_mw", "must be >= 0");
  require(c.bs.static_power >= c.bs.idle_power, "bs.static_power_mw",
          "must be >= bs.idle_power_mw");
  require(c.bs.dynamic_factor >= 0.0, "bs.dynamic_mw_per_mbps", "must be >= 0");
  require(c.ue.idle_power >= 0.0, "ue.idle_power_mw", "must be >= 0");
  require(c.ue.static_power >= c.ue.idle_power, "ue.static_power_mw",
          "must be >= ue.idle_power_mw");
  require(c.ue.dynamic_factor >= 0.0, "ue.dynamic_mw_per_mbps", "must be >= 0");
  require(c.drop.k_nearest.k >= 1, "candidates.k", "must be >= 1");
  require(c.drop.activity_factor >= 0.0, "interference.activity_factor", "must be >= 0");
  require(c.drop.path_loss.min_distance > 0.0, "path_loss.min_distance_m", "must be > 0");
  require(!c.sweep.se_points.empty(), "sweep.se_points", "must not be empty");
  for (std::size_t i = 0; i < c.sweep.se_points.size(); ++i) {
    require(c.sweep.se_points[i] > 0.0, "sweep.se_points", "must be > 0");
    require(i == 0 || c.sweep.se_points[i] > c.sweep.se_points[i - 1],
            "sweep.se_points", "must be strictly increasing");
  }
  require(c.sweep.drops_per_point >= 1, "sweep.drops_per_point", "must be >= 1");
  require(!c.sweep.schemes.empty(), "sweep.schemes", "must not be empty");
  require(!c.sweep.csi_modes.empty(), "sweep.csi_modes", "must not be empty");
  require(!c.sweep.pa_models.empty(), "sweep.pa_models", "must not be empty");
  require(c.search.t_grid_points >= 2, "search.t_grid_points", "must be >= 2");
  require(c.search.rate_tol_rel > 0.0, "search.rate_tol_rel", "must be > 0");
  require(c.search.energy_tie_tol_rel >= 0.0, "search.energy_tie_tol_rel", "must be >= 0");
  require(!c.search.t_floor || *c.search.t_floor >= 0.0, "search.t_floor_ms",
          "must be >= 0");
  require(c.oracle.power_points >= 2, "oracle.power_points", "must be >= 2");
  require(c.oracle.duration_points >= 1, "oracle.duration_points", "must be >= 1");
  require(c.oracle.power_span_decades > 0.0, "oracle.power_span_decades", "must be > 0");
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig c = default_config();
  json root = json::object();
  bool blank = true;
  for (char ch : text) blank = blank && std::isspace(static_cast<unsigned char>(ch));
  if (!blank) {
    try {
      root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
      const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ConfigError("config parse error at line " + std::to_string(line) + ": " +
                            e.what(),
                        line);
    }
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object", 1);
  for (const auto& [k, v] : root.items()) {
    static const char* sections[] = {"geometry", "demand",     "interference", "candidates",
                                     "path_loss", "bs",        "ue",           "sweep",
                                     "search",    "oracle",    "output"};
    bool ok = false;
    for (const char* s : sections) ok = ok || k == s;
    if (!ok) throw ConfigError("unknown config section '" + k + "'");
  }

  {
    Section s(root, "geometry");
    s.allow({"area_side_m", "bs_density_per_km2", "ue_x_m", "ue_y_m"});
    c.geometry.area_side = s.number("area_side_m", c.geometry.area_side);
    c.geometry.bs_density = s.number("bs_density_per_km2", c.geometry.bs_density);
    c.geometry.ue.x = s.number("ue_x_m", c.geometry.ue.x);
    c.geometry.ue.y = s.number("ue_y_m", c.geometry.ue.y);
  }
  {
    Section s(root, "demand");
    s.allow({"bandwidth_mhz", "frame_ms", "noise_psd_dbm_per_hz", "rate_mbps"});
    c.demand.bandwidth = units::megahertz(s.number("bandwidth_mhz", 10.0));
    c.demand.frame = units::milliseconds(s.number("frame_ms", 10.0));
    c.demand.noise_psd =
        units::dbm_per_hz_to_watts_per_hz(s.number("noise_psd_dbm_per_hz", -174.0));
    c.demand.rate = units::mbps(s.number("rate_mbps", 10.0));
  }
  {
    Section s(root, "interference");
    s.allow({"mode", "constant_mw", "activity_factor", "interferer_power_dbm"});
    const std::string mode = s.string("mode", "constant");
    if (mode == "constant") {
      c.drop.interference = InterferenceMode::Constant;
    } else if (mode == "computed") {
      c.drop.interference = InterferenceMode::Computed;
    } else {
      throw ConfigError("interference.mode must be 'constant' or 'computed'");
    }
    c.demand.interference = units::milliwatts(s.number("constant_mw", 0.0));
    c.drop.activity_factor = s.number("activity_factor", 1.0);
    c.drop.interferer_power = units::dbm_to_watts(s.number("interferer_power_dbm", 46.0));
  }
  {
    Section s(root, "candidates");
    s.allow({"rule", "k", "snr_threshold_db", "reference_power_dbm"});
    const std::string rule = s.string("rule", "k_nearest");
    if (rule == "k_nearest") {
      c.drop.rule = CandidateRule::KNearest;
    } else if (rule == "snr_threshold") {
      c.drop.rule = CandidateRule::SnrThreshold;
    } else {
      throw ConfigError("candidates.rule must be 'k_nearest' or 'snr_threshold'");
    }
    c.drop.k_nearest.k = s.integer("k", 3);
    c.drop.snr_threshold.threshold_db = s.number("snr_threshold_db", 0.0);
    c.drop.snr_threshold.reference_power =
        units::dbm_to_watts(s.number("reference_power_dbm", 46.0));
  }
  {
    Section s(root, "path_loss");
    s.allow({"intercept_db", "slope_db", "distance_unit", "min_distance_m"});
    c.drop.path_loss.intercept_db = s.number("intercept_db", 103.8);
    c.drop.path_loss.slope_db = s.number("slope_db", 21.0);
    const std::string unit = s.string("distance_unit", "m");
    if (unit == "m") {
      c.drop.path_loss.unit = DistanceUnit::Meters;
    } else if (unit == "km") {
      c.drop.path_loss.unit = DistanceUnit::Kilometers;
    } else {
      throw ConfigError("path_loss.distance_unit must be 'm' or 'km'");
    }
    c.drop.path_loss.min_distance = s.number("min_distance_m", 1.0);
  }
  {
    Section s(root, "bs");
    s.allow({"max_power_dbm", "max_efficiency", "ipa_efficiency", "static_power_mw",
             "idle_power_mw", "dynamic_mw_per_mbps"});
    c.bs.max_power = units::dbm_to_watts(s.number("max_power_dbm", 46.0));
    c.bs.max_efficiency = s.number("max_efficiency", 0.35);
    if (s.has("ipa_efficiency")) c.bs.ipa_efficiency = s.number("ipa_efficiency", 0.35);
    c.bs.static_power = units::milliwatts(s.number("static_power_mw", 50.0));
    c.bs.idle_power = units::milliwatts(s.number("idle_power_mw", 30.0));
    c.bs.dynamic_factor = units::mw_per_mbps(s.number("dynamic_mw_per_mbps", 5.0));
  }
  {
    Section s(root, "ue");
    s.allow({"static_power_mw", "idle_power_mw", "dynamic_mw_per_mbps"});
    c.ue.static_power = units::milliwatts(s.number("static_power_mw", 20.0));
    c.ue.idle_power = units::milliwatts(s.number("idle_power_mw", 10.0));
    c.ue.dynamic_factor = units::mw_per_mbps(s.number("dynamic_mw_per_mbps", 2.0));
  }
  {
    Section s(root, "sweep");
    s.allow({"se_start", "se_stop", "se_step", "se_points", "drops_per_point",
             "master_seed", "schemes", "csi_modes", "pa_models", "threads"});
    if (s.has("se_points")) {
      c.sweep.se_points = s.numbers("se_points");
    } else {
      const double start = s.number("se_start", 0.25);
      const double stop = s.number("se_stop", 6.0);
      const double step = s.number("se_step", 0.25);
      require(step > 0.0, "sweep.se_step", "must be > 0");
      require(stop >= start, "sweep.se_stop", "must be >= sweep.se_start");
      c.sweep.se_points = SweepSpec::se_range(start, stop, step);
    }
    c.sweep.drops_per_point = s.integer("drops_per_point", 1000);
    c.sweep.master_seed = s.integer("master_seed", 1);
    c.sweep.threads = s.integer("threads", 0);
    if (s.has("schemes")) {
      c.sweep.schemes.clear();
      for (const auto& n : s.strings("schemes")) c.sweep.schemes.push_back(parse_scheme(n));
    }
    if (s.has("csi_modes")) {
      c.sweep.csi_modes.clear();
      for (const auto& n : s.strings("csi_modes")) c.sweep.csi_modes.push_back(parse_csi(n));
    }
    if (s.has("pa_models")) {
      c.sweep.pa_models.clear();
      for (const auto& n : s.strings("pa_models")) c.sweep.pa_models.push_back(parse_pa(n));
    }
  }
  {
    Section s(root, "search");
    s.allow({"t_grid_points", "refine_iters", "rate_tol_rel", "energy_tie_tol_rel",
             "t_floor_ms", "rss_weighting"});
    c.search.t_grid_points = s.integer("t_grid_points", 2048);
    c.search.refine_iters = s.integer("refine_iters", 60);
    c.search.rate_tol_rel = s.number("rate_tol_rel", 1e-9);
    c.search.energy_tie_tol_rel = s.number("energy_tie_tol_rel", 1e-12);
    if (s.has("t_floor_ms")) {
      c.search.t_floor = units::milliseconds(s.number("t_floor_ms", 0.0));
    }
    const std::string w = s.string("rss_weighting", "reference");
    if (w == "reference") {
      c.search.rss_weighting = RssWeighting::ReferencePower;
    } else if (w == "max_power") {
      c.search.rss_weighting = RssWeighting::MaxPower;
    } else {
      throw ConfigError("search.rss_weighting must be 'reference' or 'max_power'");
    }
  }
  {
    Section s(root, "oracle");
    s.allow({"power_points", "power_span_decades", "duration_points", "polish_rounds"});
    c.oracle.power_points = s.integer("power_points", 40);
    c.oracle.power_span_decades = s.number("power_span_decades", 9.0);
    c.oracle.duration_points = s.integer("duration_points", 200);
    c.oracle.polish_rounds = s.integer("polish_rounds", 40);
  }
  {
    Section s(root, "output");
    s.allow({"dir", "svg"});
    c.output.dir = s.string("dir", "out");
    c.output.svg = s.boolean("svg", true);
  }

  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunConfig& c) {
  json j;
  j["geometry"] = {{"area_side_m", c.geometry.area_side},
                   {"bs_density_per_km2", c.geometry.bs_density},
                   {"ue_x_m", c.geometry.ue.x},
                   {"ue_y_m", c.geometry.ue.y}};
  j["demand"] = {{"bandwidth_mhz", c.demand.bandwidth / 1e6},
                 {"frame_ms", c.demand.frame * 1e3},
                 {"noise_psd_dbm_per_hz", units::watts_to_dbm(c.demand.noise_psd)},
                 {"rate_mbps", c.demand.rate / 1e6}};
  j["interference"] = {
      {"mode", c.drop.interference == InterferenceMode::Constant ? "constant" : "computed"},
      {"constant_mw", c.demand.interference * 1e3},
      {"activity_factor", c.drop.activity_factor},
      {"interferer_power_dbm", units::watts_to_dbm(c.drop.interferer_power)}};
  j["candidates"] = {
      {"rule", c.drop.rule == CandidateRule::KNearest ? "k_nearest" : "snr_threshold"},
      {"k", c.drop.k_nearest.k},
      {"snr_threshold_db", c.drop.snr_threshold.threshold_db},
      {"reference_power_dbm", units::watts_to_dbm(c.drop.snr_threshold.reference_power)}};
  j["path_loss"] = {
      {"intercept_db", c.drop.path_loss.intercept_db},
      {"slope_db", c.drop.path_loss.slope_db},
      {"distance_unit", c.drop.path_loss.unit == DistanceUnit::Meters ? "m" : "km"},
      {"min_distance_m", c.drop.path_loss.min_distance}};
  j["bs"] = {{"max_power_dbm", units::watts_to_dbm(c.bs.max_power)},
             {"max_efficiency", c.bs.max_efficiency},
             {"static_power_mw", c.bs.static_power * 1e3},
             {"idle_power_mw", c.bs.idle_power * 1e3},
             {"dynamic_mw_per_mbps", c.bs.dynamic_factor * 1e9}};
  if (c.bs.ipa_efficiency) j["bs"]["ipa_efficiency"] = *c.bs.ipa_efficiency;
  j["ue"] = {{"static_power_mw", c.ue.static_power * 1e3},
             {"idle_power_mw", c.ue.idle_power * 1e3},
             {"dynamic_mw_per_mbps", c.ue.dynamic_factor * 1e9}};
  json schemes = json::array(), csi = json::array(), pa = json::array();
  for (auto s : c.sweep.schemes) schemes.push_back(std::string(to_string(s)));
  for (auto s : c.sweep.csi_modes) csi.push_back(std::string(to_string(s)));
  for (auto s : c.sweep.pa_models) pa.push_back(std::string(to_string(s)));
  j["sweep"] = {{"se_points", c.sweep.se_points},
                {"drops_per_point", c.sweep.drops_per_point},
                {"master_seed", c.sweep.master_seed},
                {"schemes", schemes},
                {"csi_modes", csi},
                {"pa_models", pa},
                {"threads", c.sweep.threads}};
  j["search"] = {{"t_grid_points", c.search.t_grid_points},
                 {"refine_iters", c.search.refine_iters},
                 {"rate_tol_rel", c.search.rate_tol_rel},
                 {"energy_tie_tol_rel", c.search.energy_tie_tol_rel},
                 {"rss_weighting", c.search.rss_weighting == RssWeighting::ReferencePower
                                       ? "reference"
                                       : "max_power"}};
  if (c.search.t_floor) j["search"]["t_floor_ms"] = *c.search.t_floor * 1e3;
  j["oracle"] = {{"power_points", c.oracle.power_points},
                 {"power_span_decades", c.oracle.power_span_decades},
                 {"duration_points", c.oracle.duration_points},
                 {"polish_rounds", c.oracle.polish_rounds}};
  j["output"] = {{"dir", c.output.dir}, {"svg", c.output.svg}};
  return j.dump(2) + "\n";
}

void apply_environment(RunConfig& config) {
  const char* seed = std::getenv("GREENHCN_SEED");
  if (!seed || !*seed) return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(seed, &end, 10);
  if (end == seed || *end != '\0') {
    throw ConfigError(std::string("GREENHCN_SEED must be an unsigned integer, got '") +
                      seed + "'");
  }
  config.sweep.master_seed = v;
}

}  // namespace greenhcn
