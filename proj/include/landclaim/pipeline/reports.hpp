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

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>

#include "landclaim/aggregate/comparison.hpp"
#include "landclaim/aggregate/stats.hpp"
#include "landclaim/ingest/raw_element.hpp"

namespace landclaim::pipeline {

/// iso3,name,courses,total_area_km2,mean_area_km2,land_share_pct
std::string country_stats_csv(const aggregate::StatsReport& stats);
/// iso3,technology,scenario,potential_mw,installed_2023_mw,projected_2028_mw,meets_2028
/// Missing reference values are written as NA.
std::string potential_csv(std::span<const aggregate::PotentialComparison> rows);
std::string equivalence_csv(std::span<const aggregate::EquivalenceRow> rows);
/// element_kind,element_id,reason
std::string skip_report_csv(std::span<const ingest::SkipRecord> rows);

/// Report file name for a spacing, e.g. placements_500.geojson.
std::string placements_file_name(double spacing_m);

/// Writes every (file name, content) pair into `out_dir`. Files are staged
/// in a temporary directory first, so an unwritable destination fails
/// before anything is written, and each file lands with an atomic rename.
void write_reports(const std::map<std::string, std::string>& files,
                   const std::filesystem::path& out_dir);

}  // namespace landclaim::pipeline
