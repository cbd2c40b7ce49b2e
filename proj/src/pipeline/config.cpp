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

#include "landclaim/pipeline/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "landclaim/error.hpp"
#include "landclaim/io.hpp"

#ifndef LANDCLAIM_DATA_DIR
#define LANDCLAIM_DATA_DIR "data"
#endif

namespace landclaim::pipeline {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw ValidationError("unknown config key '" + where + k + "'");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (auto it = obj.find(key); it != obj.end()) {
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ValidationError(std::string("config key '") + key + "' has the wrong type");
    }
  }
}

void read_path(const json& obj, const char* key, const fs::path& base, fs::path& out) {
  std::string s;
  read(obj, key, s);
  if (s.empty()) return;
  fs::path p(s);
  out = (p.is_relative() && !base.empty()) ? base / p : p;
}

}  // namespace

void RunConfig::validate() const {
  scenario.turbine.validate();
  scenario.pv.validate();
  scenario.equivalence.validate();
  if (scenario.spacings_m.empty()) throw ValidationError("at least one spacing is required");
  for (double s : scenario.spacings_m) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("spacings must be positive");
  }
  if (top_n == 0) throw ValidationError("top_n must be at least 1");
  if (out_dir.empty()) throw ValidationError("an output directory is required");
  if (cache_dir.empty()) throw ValidationError("a cache directory is required");
}

RunConfig parse_run_config(std::string_view json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  reject_unknown(doc,
                 {"extract", "boundaries", "reference", "out", "cache", "endpoint", "query",
                  "turbine", "spacings_m", "guarantee_one", "pv", "equivalence", "top_n",
                  "exclude"},
                 "");

  RunConfig c;
  read_path(doc, "extract", base_dir, c.extract);
  read_path(doc, "boundaries", base_dir, c.boundaries);
  read_path(doc, "reference", base_dir, c.reference);
  read_path(doc, "out", base_dir, c.out_dir);
  read_path(doc, "cache", base_dir, c.cache_dir);
  read(doc, "endpoint", c.endpoint);
  read(doc, "query", c.query);
  read(doc, "spacings_m", c.scenario.spacings_m);
  read(doc, "guarantee_one", c.scenario.guarantee_one);
  read(doc, "top_n", c.top_n);
  read(doc, "exclude", c.exclude);
  if (auto t = doc.find("turbine"); t != doc.end()) {
    reject_unknown(*t, {"rated_power_mw", "rotor_diameter_m"}, "turbine.");
    read(*t, "rated_power_mw", c.scenario.turbine.rated_power_mw);
    read(*t, "rotor_diameter_m", c.scenario.turbine.rotor_diameter_m);
  }
  if (auto pv = doc.find("pv"); pv != doc.end()) {
    reject_unknown(*pv, {"density_mw_per_km2", "coverages"}, "pv.");
    read(*pv, "density_mw_per_km2", c.scenario.pv.density_mw_per_km2);
    read(*pv, "coverages", c.scenario.pv.coverages);
  }
  if (auto eq = doc.find("equivalence"); eq != doc.end()) {
    reject_unknown(*eq, {"pv_km2_per_mw", "wind_km2_per_mw", "pv_comparison_km2_per_mw"},
                   "equivalence.");
    read(*eq, "pv_km2_per_mw", c.scenario.equivalence.pv_km2_per_mw);
    read(*eq, "wind_km2_per_mw", c.scenario.equivalence.wind_km2_per_mw);
    read(*eq, "pv_comparison_km2_per_mw", c.scenario.equivalence.pv_comparison_km2_per_mw);
  }
  c.validate();
  return c;
}

RunConfig load_run_config(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  return parse_run_config(text, path.parent_path());
}

std::string run_config_to_json(const RunConfig& c) {
  const auto& s = c.scenario;
  json doc = {
      {"extract", c.extract.string()},
      {"boundaries", c.boundaries.string()},
      {"reference", c.reference.string()},
      {"out", c.out_dir.string()},
      {"cache", c.cache_dir.string()},
      {"endpoint", c.endpoint},
      {"query", c.query},
      {"turbine",
       {{"rated_power_mw", s.turbine.rated_power_mw},
        {"rotor_diameter_m", s.turbine.rotor_diameter_m}}},
      {"spacings_m", s.spacings_m},
      {"guarantee_one", s.guarantee_one},
      {"pv", {{"density_mw_per_km2", s.pv.density_mw_per_km2}, {"coverages", s.pv.coverages}}},
      {"equivalence",
       {{"pv_km2_per_mw", s.equivalence.pv_km2_per_mw},
        {"wind_km2_per_mw", s.equivalence.wind_km2_per_mw},
        {"pv_comparison_km2_per_mw", s.equivalence.pv_comparison_km2_per_mw}}},
      {"top_n", c.top_n},
      {"exclude", c.exclude},
  };
  return doc.dump(2) + "\n";
}

fs::path default_reference_path() {
  return fs::path(LANDCLAIM_DATA_DIR) / "reference_capacity.csv";
}

}  // namespace landclaim::pipeline
