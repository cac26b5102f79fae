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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = {}) {
  const std::string cmd =
      (env.empty() ? "" : "env " + env + " ") + GREENHCN_CLI + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = ::pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("greenhcn_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string csv_row(const std::string& out) {
  const auto a = out.find('\n');
  return out.substr(a + 1, out.find('\n', a + 1) - a - 1);
}

double energy_field(const std::string& row) {
  std::stringstream s(row);
  std::string f;
  for (int i = 0; i <= 7; ++i) std::getline(s, f, ',');
  return std::stod(f);
}

TEST(Cli, SolveIsDeterministic) {
  const CliRun a = run("solve --drop-seed 17"), b = run("solve --drop-seed 17");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("energy"), std::string::npos);
}

TEST(Cli, ProposedNotWorseThanTraditional) {
  for (int seed : {1, 2, 3, 4, 5, 6}) {
    const CliRun p = run("solve --drop-seed " + std::to_string(seed));
    const CliRun t = run("solve --scheme traditional --drop-seed " + std::to_string(seed));
    if (p.status != 0) continue;
    ASSERT_EQ(t.status, 0);
    EXPECT_LE(energy_field(csv_row(p.out)), energy_field(csv_row(t.out)));
  }
}

TEST(Cli, ProposedRowsIdenticalAcrossCsi) {
  const CliRun l = run("solve --csi long --drop-seed 5"), s = run("solve --csi short --drop-seed 5");
  ASSERT_EQ(l.status, 0);
  EXPECT_EQ(csv_row(l.out), csv_row(s.out));
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("exit");
  EXPECT_EQ(run("verify --drops 0").status, 2);
  EXPECT_EQ(run("solve --scheme best").status, 2);
  EXPECT_EQ(run("--config " + write_config(dir, "{ \"bs\": ").string() + " solve").status, 2);
  EXPECT_EQ(run("--config " + write_config(dir, R"({"demand": {"rate_mbps": 2000}})").string() +
                " solve")
                .status,
            3);
  EXPECT_EQ(run("bogus").status, 2);
  fs::remove_all(dir);
}

TEST(Cli, SweepOutputsAreByteIdentical) {
  const fs::path dir = scratch("sweep");
  const fs::path cfg = write_config(
      dir, R"({"sweep": {"se_points": [0.5, 2, 4], "drops_per_point": 20, "threads": 1}})");
  ASSERT_EQ(run("--config " + cfg.string() + " sweep -q --out " + (dir / "a").string()).status,
            0);
  ASSERT_EQ(run("--config " + cfg.string() + " sweep -q --threads 3 --out " +
                (dir / "b").string())
                .status,
            0);
  for (const char* f : {"energy_vs_se.csv", "duration_vs_se.csv", "pa_compare.csv",
                        "energy_vs_se.svg"}) {
    EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f)) << f;
  }
  const std::string csv = slurp(dir / "a" / "energy_vs_se.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "se,scheme,csi,pa,mean_energy_mJ,mean_t_star_ms,infeasible_frac,drops");
  fs::remove_all(dir);
}

TEST(Cli, SeedOverrideChangesSweep) {
  const fs::path dir = scratch("seed");
  const fs::path cfg = write_config(
      dir, R"({"sweep": {"se_points": [1], "drops_per_point": 10, "schemes": ["proposed"]}})");
  const std::string args = "--config " + cfg.string() + " sweep -q --no-svg --out ";
  ASSERT_EQ(run(args + (dir / "a").string()).status, 0);
  ASSERT_EQ(run(args + (dir / "b").string(), "GREENHCN_SEED=99").status, 0);
  ASSERT_EQ(run(args + (dir / "c").string(), "GREENHCN_SEED=99").status, 0);
  EXPECT_NE(slurp(dir / "a" / "energy_vs_se.csv"), slurp(dir / "b" / "energy_vs_se.csv"));
  EXPECT_EQ(slurp(dir / "b" / "energy_vs_se.csv"), slurp(dir / "c" / "energy_vs_se.csv"));
  EXPECT_EQ(run(args + (dir / "d").string(), "GREENHCN_SEED=abc").status, 2);
  fs::remove_all(dir);
}

}  // namespace
