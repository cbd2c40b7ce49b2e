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

#include "landclaim/pipeline/reports.hpp"

#include <fmt/format.h>

#include "landclaim/csv.hpp"
#include "landclaim/error.hpp"
#include "landclaim/io.hpp"

namespace landclaim::pipeline {
namespace fs = std::filesystem;

namespace {

std::string optional_fixed(const std::optional<double>& v) {
  return v ? csv::fixed6(*v) : std::string("NA");
}

}  // namespace

std::string country_stats_csv(const aggregate::StatsReport& stats) {
  std::string out = "iso3,name,courses,total_area_km2,mean_area_km2,land_share_pct\n";
  for (const auto& c : stats.countries) {
    out += fmt::format("{},{},{},{},{},{}\n", csv::escape(c.iso3), csv::escape(c.name),
                       c.course_count, csv::fixed6(c.total_area_km2),
                       csv::fixed6(c.mean_area_km2), csv::fixed6(100.0 * c.land_share));
  }
  return out;
}

std::string potential_csv(std::span<const aggregate::PotentialComparison> rows) {
  std::string out =
      "iso3,technology,scenario,potential_mw,installed_2023_mw,projected_2028_mw,meets_2028\n";
  for (const auto& r : rows) {
    const std::string meets = r.meets_2028 ? (*r.meets_2028 ? "true" : "false") : "NA";
    out += fmt::format("{},{},{},{},{},{},{}\n", csv::escape(r.iso3),
                       aggregate::to_string(r.technology), csv::escape(r.scenario),
                       csv::fixed6(r.potential_mw), optional_fixed(r.installed_2023_mw),
                       optional_fixed(r.projected_2028_mw), meets);
  }
  return out;
}

std::string equivalence_csv(std::span<const aggregate::EquivalenceRow> rows) {
  std::string out =
      "iso3,golf_area_km2,installed_pv_2023_mw,equivalent_pv_area_km2,golf_to_pv_ratio\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{}\n", csv::escape(r.iso3), csv::fixed6(r.golf_area_km2),
                       optional_fixed(r.installed_pv_2023_mw),
                       optional_fixed(r.equivalent_pv_area_km2),
                       optional_fixed(r.golf_to_pv_ratio));
  }
  return out;
}

std::string skip_report_csv(std::span<const ingest::SkipRecord> rows) {
  std::string out = "element_kind,element_id,reason\n";
  for (const auto& r : rows) {
    out += csv::escape(r.element_kind) + "," + csv::escape(r.element_id) + "," +
           csv::escape(r.reason) + "\n";
  }
  return out;
}

std::string placements_file_name(double spacing_m) {
  return fmt::format("placements_{:g}.geojson", spacing_m);
}

void write_reports(const std::map<std::string, std::string>& files, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw Error("cannot create output directory " + out_dir.string());
  }
  const fs::path staging = out_dir / (".staging-" + unique_suffix());
  if (!fs::create_directory(staging, ec) || ec) {
    throw Error("output directory " + out_dir.string() + " is not writable");
  }
  try {
    for (const auto& [name, content] : files) write_file_atomic(staging / name, content);
    for (const auto& [name, content] : files) {
      fs::rename(staging / name, out_dir / name);
    }
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  fs::remove_all(staging, ec);
}

}  // namespace landclaim::pipeline
