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

#include "greenhcn/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "greenhcn/units.hpp"

namespace greenhcn {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

std::string energy_csv(const std::vector<SweepRow>& rows) {
  std::string out = "se,scheme,csi,pa,mean_energy_mJ,mean_t_star_ms,infeasible_frac,drops\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", format_number(r.se), to_string(r.scheme),
                       to_string(r.csi), to_string(r.pa), format_number(r.mean_energy * 1e3),
                       format_number(r.mean_t_star * 1e3),
                       format_number(r.infeasible_fraction), r.drops_used);
  }
  return out;
}

std::string duration_csv(const std::vector<DurationSeries>& series, double frame) {
  std::string out = "scheme,csi,pa,se,mean_t_star_ms,saturated\n";
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.se.size(); ++i) {
      const bool sat = s.t_star[i] >= frame * (1.0 - 1e-9);
      out += fmt::format("{},{},{},{},{},{}\n", to_string(s.scheme), to_string(s.csi),
                         to_string(s.pa), format_number(s.se[i]),
                         format_number(s.t_star[i] * 1e3), sat ? 1 : 0);
    }
  }
  return out;
}

std::string pa_compare_csv(const std::vector<PaComparison>& comparisons) {
  std::string out = "scheme,csi,se,energy_tpa_mJ,energy_ipa_mJ,ratio_tpa_over_ipa\n";
  for (const auto& c : comparisons) {
    for (std::size_t i = 0; i < c.se.size(); ++i) {
      out += fmt::format("{},{},{},{},{},{}\n", to_string(c.scheme), to_string(c.csi),
                         format_number(c.se[i]), format_number(c.energy_tpa[i] * 1e3),
                         format_number(c.energy_ipa[i] * 1e3),
                         format_number(c.energy_tpa[i] / c.energy_ipa[i]));
    }
  }
  return out;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf", "#000000", "#aec7e8",
                                    "#ff9896", "#98df8a", "#ffbb78", "#c5b0d5"};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<ChartSeries>& series) {
  constexpr double kW = 760, kH = 480, kL = 70, kR = 200, kT = 40, kB = 50;
  const double pw = kW - kL - kR, ph = kH - kT - kB;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  y0 = std::min(y0, 0.0);
  const auto px = [&](double x) { return kL + (x - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return kT + ph - (y - y0) / (y1 - y0) * ph; };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
      kW, kH, kL + pw / 2, escape(title));
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>\n",
      kL, kT, pw, ph);
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0, yv = y0 + (y1 - y0) * i / 5.0;
    out += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1}\" x2=\"{0:.1f}\" y2=\"{2}\" stroke=\"#ddd\"/>"
        "<text x=\"{0:.1f}\" y=\"{3}\" text-anchor=\"middle\">{4:.3g}</text>\n",
        px(xv), kT, kT + ph, kT + ph + 16, xv);
    out += fmt::format(
        "<line x1=\"{1}\" y1=\"{0:.1f}\" x2=\"{2}\" y2=\"{0:.1f}\" stroke=\"#ddd\"/>"
        "<text x=\"{3}\" y=\"{0:.1f}\" text-anchor=\"end\">{4:.3g}</text>\n",
        py(yv), kL, kL + pw, kL - 6, yv);
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                     kL + pw / 2, kH - 12, escape(x_label));
  out += fmt::format(
      "<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0})\">"
      "{1}</text>\n",
      kT + ph / 2, escape(y_label));

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string pts;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      pts += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
    }
    if (!pts.empty()) pts.pop_back();
    out += fmt::format(
        "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color,
        pts);
    const double ly = kT + 10 + 16.0 * k;
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>"
        "<text x=\"{4}\" y=\"{5}\">{6}</text>\n",
        kL + pw + 10, ly, kL + pw + 30, color, kL + pw + 36, ly + 4, escape(s.name));
  }
  out += "</svg>\n";
  return out;
}

std::vector<std::filesystem::path> write_sweep_outputs(const std::vector<SweepRow>& rows,
                                                       double frame,
                                                       const std::filesystem::path& dir,
                                                       bool svg) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());

  const auto series = duration_curve(rows, frame);
  const auto pa = compare_pa_models(rows);
  std::vector<std::filesystem::path> written;
  const auto emit = [&](const char* name, const std::string& text) {
    write_file(dir / name, text);
    written.push_back(dir / name);
  };
  emit("energy_vs_se.csv", energy_csv(rows));
  emit("duration_vs_se.csv", duration_csv(series, frame));
  emit("pa_compare.csv", pa_compare_csv(pa));
  if (!svg) return written;

  std::vector<ChartSeries> energy, duration, ratio;
  for (const auto& r : rows) {
    const std::string name = fmt::format("{}/{}/{}", to_string(r.scheme), to_string(r.csi),
                                         to_string(r.pa));
    if (energy.empty() || energy.back().name != name) energy.push_back({name, {}, {}});
    energy.back().x.push_back(r.se);
    energy.back().y.push_back(r.mean_energy * 1e3);
  }
  for (const auto& s : series) {
    ChartSeries c{fmt::format("{}/{}/{}", to_string(s.scheme), to_string(s.csi),
                              to_string(s.pa)),
                  s.se, {}};
    for (double t : s.t_star) c.y.push_back(t * 1e3);
    duration.push_back(std::move(c));
  }
  for (const auto& c : pa) {
    ChartSeries s{fmt::format("{}/{}", to_string(c.scheme), to_string(c.csi)), c.se, {}};
    for (std::size_t i = 0; i < c.se.size(); ++i) {
      s.y.push_back(c.energy_tpa[i] / c.energy_ipa[i]);
    }
    ratio.push_back(std::move(s));
  }
  emit("energy_vs_se.svg",
       svg_line_chart("Mean frame energy", "required rate / bandwidth (bit/s/Hz)",
                      "energy (mJ)", energy));
  emit("duration_vs_se.svg",
       svg_line_chart("Mean transmit duration", "required rate / bandwidth (bit/s/Hz)",
                      "t* (ms)", duration));
  emit("pa_compare.svg",
       svg_line_chart("TPA / IPA energy ratio", "required rate / bandwidth (bit/s/Hz)",
                      "E_tpa / E_ipa", ratio));
  return written;
}

std::string solve_csv_header() {
  return "scheme,pa,chosen_bs,active_bs,power_W,t_star_ms,t_lower_ms,energy_mJ,"
         "pa_mJ,circuit_mJ,idle_mJ,ue_mJ,rate_Mbps";
}

std::string solve_csv_row(const SolveResult& result, const Problem& problem, PaModel pa) {
  const auto& e = result.energy;
  return fmt::format(
      "{},{},{},{},{},{},{},{},{},{},{},{},{}", to_string(result.scheme), to_string(pa),
      result.chosen_bs ? std::to_string(*result.chosen_bs) : std::string("all"),
      result.allocation.active_count(), format_number(result.power),
      format_number(result.t_star * 1e3), format_number(result.t_lower * 1e3),
      format_number(e.total * 1e3), format_number(e.pa * 1e3),
      format_number((e.dynamic_circuit + e.static_circuit) * 1e3),
      format_number(e.idle * 1e3), format_number(e.ue * 1e3),
      format_number(achieved_rate(result, problem) / 1e6));
}

std::string solve_summary(const SolveResult& result, const Problem& problem) {
  const auto& e = result.energy;
  std::string out;
  out += fmt::format("scheme        {} ({} CSI, {} PA)\n", to_string(result.scheme),
                     to_string(result.csi), to_string(problem.pa));
  out += fmt::format("candidates    {}\n", problem.size());
  if (result.chosen_bs) {
    out += fmt::format("serving BS    {}\n", *result.chosen_bs);
  } else {
    out += fmt::format("serving BS    all {} candidates\n", result.allocation.active_count());
  }
  out += fmt::format("tx power      {:.6g} W ({:.4f} dBm) per BS\n", result.power,
                     result.power > 0.0 ? units::watts_to_dbm(result.power) : -HUGE_VAL);
  out += fmt::format("duration      {:.6g} ms (lower bound {:.6g} ms, frame {:.6g} ms)\n",
                     result.t_star * 1e3, result.t_lower * 1e3, problem.demand.frame * 1e3);
  out += fmt::format("rate          {:.6g} Mbps (required {:.6g})\n",
                     achieved_rate(result, problem) / 1e6, problem.demand.rate / 1e6);
  out += fmt::format("energy        {:.6g} mJ\n", e.total * 1e3);
  out += fmt::format("  PA          {:.6g} mJ\n", e.pa * 1e3);
  out += fmt::format("  circuit     {:.6g} mJ\n", (e.dynamic_circuit + e.static_circuit) * 1e3);
  out += fmt::format("  idle        {:.6g} mJ\n", e.idle * 1e3);
  out += fmt::format("  UE          {:.6g} mJ\n", e.ue * 1e3);
  return out;
}

}  // namespace greenhcn
