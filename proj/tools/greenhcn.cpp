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

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "greenhcn/config.hpp"
#include "greenhcn/errors.hpp"
#include "greenhcn/montecarlo.hpp"
#include "greenhcn/report.hpp"
#include "greenhcn/units.hpp"
#include "greenhcn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerify = 4;

using namespace greenhcn;

RunConfig resolve_config(const std::string& path) {
  RunConfig c = path.empty() ? parse_config("") : load_config(path);
  apply_environment(c);
  return c;
}

void print_infeasible(const Problem& p) {
  std::cerr << "infeasible demand: no candidate meets the rate within the frame\n";
  for (std::size_t m = 0; m < p.size(); ++m) {
    const DemandSpec& d = p.demand;
    const double snr = p.profiles[m].max_power * p.channels[m].gain_pow() /
                       d.noise_plus_interference();
    const double t_min = d.frame * d.spectral_efficiency() / std::log2(1.0 + snr);
    std::cerr << fmt::format(
        "  BS {}: t_min {:.6g} ms at p_max {:.6g} dBm (frame {:.6g} ms, SNR at p_max {:.4g} dB)\n",
        m, t_min * 1e3, units::watts_to_dbm(p.profiles[m].max_power), d.frame * 1e3,
        units::linear_to_db(snr));
  }
}

int cmd_solve(const RunConfig& config, std::uint64_t drop_seed, const std::string& scheme,
              const std::string& csi, const std::string& pa, bool header) {
  const SchemeTag s = parse_scheme(scheme);
  const CsiMode c = parse_csi(csi);
  const PaModel a = parse_pa(pa);
  Drop drop;
  try {
    SweepSpec spec;
    spec.master_seed = drop_seed;
    drop = sweep_drop(spec, config.sweep_inputs(), 0);
  } catch (const DropRejected& e) {
    std::cerr << "drop " << drop_seed << " rejected: " << e.what() << "\n";
    return kExitInfeasible;
  }
  const Problem problem = make_problem(drop, config.bs, config.ue, a);
  SolveResult r;
  try {
    r = solve(s, problem, c, config.search);
  } catch (const InfeasibleError&) {
    print_infeasible(problem);
    return kExitInfeasible;
  }
  if (header) std::cout << solve_csv_header() << "\n";
  std::cout << solve_csv_row(r, problem, a) << "\n\n" << solve_summary(r, problem);
  return kExitOk;
}

int cmd_sweep(RunConfig config, const std::optional<std::string>& out,
              std::optional<std::size_t> drops, std::optional<std::size_t> threads,
              bool no_svg, bool quiet) {
  if (out) config.output.dir = *out;
  if (drops) config.sweep.drops_per_point = *drops;
  if (threads) config.sweep.threads = *threads;
  if (no_svg) config.output.svg = false;
  config.sweep.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_sweep(config.sweep, config.sweep_inputs());
  const auto files =
      write_sweep_outputs(rows, config.demand.frame, config.output.dir, config.output.svg);
  if (!quiet) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << fmt::format("sweep: {} se points x {} drops in {:.1f} s\n",
                             config.sweep.se_points.size(), config.sweep.drops_per_point, secs);
    for (const auto& f : files) std::cerr << "  wrote " << f.string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::size_t drops, bool sabotage) {
  VerifyOptions opts;
  opts.drops = drops;
  opts.sabotage_split = sabotage;
  const VerifyReport report = run_verification(config, opts);
  std::cout << report.format();
  return report.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-minimal user access control and resource allocation in HCNs"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("-c,--config", config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);

  auto* solve_cmd = app.add_subcommand("solve", "Solve one drop with one scheme");
  std::uint64_t drop_seed = 1;
  std::string scheme = "proposed", csi = "long", pa = "tpa";
  bool no_header = false;
  solve_cmd->add_option("--drop-seed", drop_seed, "Seed of the drop to solve");
  solve_cmd->add_option("--scheme", scheme, "proposed | approx | traditional | all-access");
  solve_cmd->add_option("--csi", csi, "long | short");
  solve_cmd->add_option("--pa", pa, "tpa | ipa");
  solve_cmd->add_flag("--no-header", no_header, "Omit the CSV header line");

  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over spectral efficiency");
  std::optional<std::string> out;
  std::optional<std::size_t> sweep_drops, threads;
  bool no_svg = false, quiet = false;
  sweep_cmd->add_option("--out", out, "Output directory");
  sweep_cmd->add_option("--drops", sweep_drops, "Drops per se point");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  sweep_cmd->add_flag("--no-svg", no_svg, "Skip SVG charts");
  sweep_cmd->add_flag("-q,--quiet", quiet, "No progress output");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  std::size_t verify_drops = 200;
  bool sabotage = false;
  verify_cmd->add_option("--drops", verify_drops, "Number of verification drops");
  verify_cmd->add_flag("--sabotage", sabotage,
                       "Restrict the oracle to split allocations (two or more BSs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const RunConfig config = resolve_config(config_path);
    if (*solve_cmd) return cmd_solve(config, drop_seed, scheme, csi, pa, !no_header);
    if (*sweep_cmd) return cmd_sweep(config, out, sweep_drops, threads, no_svg, quiet);
    if (*verify_cmd) return cmd_verify(config, verify_drops, sabotage);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ContractError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
