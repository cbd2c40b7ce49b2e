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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "landclaim/capacity/pv.hpp"
#include "landclaim/placement/placement.hpp"

namespace landclaim::pipeline {

struct ScenarioConfig {
  placement::TurbineSpec turbine;
  std::vector<double> spacings_m{1500.0, 1000.0, 500.0};
  bool guarantee_one = true;
  capacity::PVConfig pv;
  capacity::EquivalenceFactors equivalence;
};

struct RunConfig {
  std::filesystem::path extract;     // empty: fetch from `endpoint`
  std::filesystem::path boundaries;
  std::filesystem::path reference;   // empty: shipped reference_capacity.csv
  std::filesystem::path out_dir = "landclaim-out";
  std::filesystem::path cache_dir = ".landclaim-cache";
  std::string endpoint;              // empty: $OVERPASS_ENDPOINT or default
  std::string query;                 // empty: global golf-course query
  ScenarioConfig scenario;
  std::size_t top_n = 10;
  std::vector<std::string> exclude{"CHN"};

  /// Checks parameter values (not file existence); throws ValidationError.
  void validate() const;
};

/// Parses the JSON config format. Relative paths resolve against
/// `base_dir`. Unknown keys are rejected.
RunConfig parse_run_config(std::string_view json_text,
                           const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);
std::string run_config_to_json(const RunConfig& config);

/// Reference CSV shipped with the sources.
std::filesystem::path default_reference_path();

}  // namespace landclaim::pipeline
