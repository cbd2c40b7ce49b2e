// Copyright 2026 The landclaim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "landclaim/pipeline/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

namespace landclaim::pipeline {
namespace {

constexpr const char* kScenarioColor = "#4c78a8";
constexpr const char* kInstalledColor = "#f58518";
constexpr const char* kProjectedColor = "#54a24b";

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string header(double width, double height, const std::string& title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\" font-size=\"11\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2:.1f}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
      width, height, width / 2.0, xml_escape(title));
}

struct Bar {
  std::string label;
  double value;
  const char* color;
};

struct Panel {
  std::string iso3;
  std::vector<Bar> bars;
};

// Maps a value to [0, 1] on a linear or log axis.
struct Axis {
  bool log = false;
  double lo = 0.0;
  double hi = 1.0;

  double fraction(double v) const {
    if (log) {
      if (v <= 0.0) return 0.0;
      return std::clamp((std::log10(v) - lo) / (hi - lo), 0.0, 1.0);
    }
    return hi > 0.0 ? std::clamp(v / hi, 0.0, 1.0) : 0.0;
  }
  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double e = std::ceil(lo); e <= hi + 1e-12; e += 1.0) out.push_back(std::pow(10.0, e));
    } else {
      for (int i = 0; i <= 4; ++i) out.push_back(hi * i / 4.0);
    }
    return out;
  }
};

std::string gw_label(double gw) {
  if (gw == 0.0) return "0";
  if (std::abs(gw) >= 100.0) return fmt::format("{:.0f}", gw);
  if (std::abs(gw) >= 1.0) return fmt::format("{:.1f}", gw);
  return fmt::format("{:.3g}", gw);
}

}  // namespace

std::string area_chart_svg(const aggregate::StatsReport& stats, std::size_t top_n) {
  const std::size_t n = std::min(top_n, stats.countries.size());
  const double row = 26.0;
  const double left = 190.0;
  const double bar_max = 460.0;
  const double width = left + bar_max + 110.0;
  const double height = 50.0 + row * static_cast<double>(std::max<std::size_t>(n, 1)) + 30.0;

  double max_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_area = std::max(max_area, stats.countries[i].total_area_km2);

  std::string svg = header(width, height, "Golf course area by country (km²)");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = stats.countries[i];
    const double y = 45.0 + row * static_cast<double>(i);
    const double w = max_area > 0.0 ? bar_max * c.total_area_km2 / max_area : 0.0;
    svg += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{} ({} courses)</text>\n",
        left - 8.0, y + 15.0, xml_escape(c.name.empty() ? c.iso3 : c.name), c.course_count);
    svg += fmt::format(
        "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.2f}\" height=\"{:.1f}\" fill=\"{}\"/>\n",
        left, y + 3.0, w, row - 6.0, kScenarioColor);
    svg += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\">{:.1f} km² · {:.2f}%</text>\n", left + w + 6.0,
        y + 15.0, c.total_area_km2, 100.0 * c.land_share);
  }
  svg += "</svg>\n";
  return svg;
}

std::string potential_chart_svg(std::span<const aggregate::PotentialComparison> rows,
                                aggregate::Technology technology, const std::string& title) {
  std::vector<Panel> panels;
  std::map<std::string, std::pair<std::optional<double>, std::optional<double>>> refs;
  for (const auto& r : rows) {
    if (r.technology != technology || r.iso3.rfind("TOP", 0) == 0) continue;
    if (panels.empty() || panels.back().iso3 != r.iso3) panels.push_back({r.iso3, {}});
    panels.back().bars.push_back({r.scenario, r.potential_mw / 1000.0, kScenarioColor});
    refs[r.iso3] = {r.installed_2023_mw, r.projected_2028_mw};
  }
  for (auto& p : panels) {
    const auto& [installed, projected] = refs[p.iso3];
    if (installed) p.bars.push_back({"2023", *installed / 1000.0, kInstalledColor});
    if (projected) p.bars.push_back({"2028", *projected / 1000.0, kProjectedColor});
  }

  const std::size_t cols = 5;
  const double panel_w = 230.0;
  const double panel_h = 250.0;
  const std::size_t n_rows = std::max<std::size_t>(1, (panels.size() + cols - 1) / cols);
  const double width = panel_w * static_cast<double>(cols);
  const double height = 80.0 + panel_h * static_cast<double>(n_rows);

  std::string svg = header(width, height, title + " (GW)");
  svg += fmt::format(
      "<g font-size=\"11\"><rect x=\"20\" y=\"36\" width=\"10\" height=\"10\" fill=\"{}\"/>"
      "<text x=\"34\" y=\"45\">potential</text>"
      "<rect x=\"110\" y=\"36\" width=\"10\" height=\"10\" fill=\"{}\"/>"
      "<text x=\"124\" y=\"45\">installed 2023</text>"
      "<rect x=\"230\" y=\"36\" width=\"10\" height=\"10\" fill=\"{}\"/>"
      "<text x=\"244\" y=\"45\">projected 2028</text></g>\n",
      kScenarioColor, kInstalledColor, kProjectedColor);

  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel& p = panels[i];
    const double ox = panel_w * static_cast<double>(i % cols);
    const double oy = 60.0 + panel_h * static_cast<double>(i / cols);
    const double plot_x = ox + 48.0;
    const double plot_y = oy + 24.0;
    const double plot_w = panel_w - 62.0;
    const double plot_h = panel_h - 90.0;

    double max_potential = 0.0;
    double max_value = 0.0;
    double min_positive = 0.0;
    for (const auto& b : p.bars) {
      if (b.color == kScenarioColor) max_potential = std::max(max_potential, b.value);
      max_value = std::max(max_value, b.value);
      if (b.value > 0.0 && (min_positive == 0.0 || b.value < min_positive)) min_positive = b.value;
    }
    double max_ref = 0.0;
    for (const auto& b : p.bars) {
      if (b.color != kScenarioColor) max_ref = std::max(max_ref, b.value);
    }

    Axis axis;
    axis.log = max_ref > 10.0 * max_potential && min_positive > 0.0;
    if (axis.log) {
      axis.lo = std::floor(std::log10(min_positive));
      axis.hi = std::ceil(std::log10(max_value));
      if (axis.hi <= axis.lo) axis.hi = axis.lo + 1.0;
    } else {
      axis.hi = max_value > 0.0 ? max_value * 1.1 : 1.0;
    }

    svg += fmt::format("<g>\n<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" "
                       "font-size=\"13\">{}{}</text>\n",
                       ox + panel_w / 2.0, oy + 14.0, xml_escape(p.iso3),
                       axis.log ? " (log scale)" : "");
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#333\"/>\n",
        plot_x, plot_y, plot_y + plot_h);
    for (double t : axis.ticks()) {
      const double ty = plot_y + plot_h * (1.0 - axis.fraction(t));
      svg += fmt::format(
          "<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#ccc\"/>"
          "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" font-size=\"9\">{}</text>\n",
          plot_x, ty, plot_x + plot_w, ty, plot_x - 3.0, ty + 3.0, gw_label(t));
    }
    const double slot = plot_w / static_cast<double>(std::max<std::size_t>(1, p.bars.size()));
    for (std::size_t b = 0; b < p.bars.size(); ++b) {
      const Bar& bar = p.bars[b];
      const double h = plot_h * axis.fraction(bar.value);
      const double bx = plot_x + slot * static_cast<double>(b) + 0.15 * slot;
      svg += fmt::format(
          "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.2f}\" fill=\"{}\">"
          "<title>{}: {} GW</title></rect>\n",
          bx, plot_y + plot_h - h, 0.7 * slot, h, bar.color, xml_escape(bar.label),
          gw_label(bar.value));
      svg += fmt::format(
          "<text transform=\"translate({:.1f},{:.1f}) rotate(60)\" font-size=\"8\">{}</text>\n",
          bx + 0.2 * slot, plot_y + plot_h + 8.0, xml_escape(bar.label));
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace landclaim::pipeline
