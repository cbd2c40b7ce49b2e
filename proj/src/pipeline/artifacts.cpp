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

#include "landclaim/pipeline/artifacts.hpp"

#include <sstream>

#include <json.hpp>

#include "landclaim/csv.hpp"
#include "landclaim/error.hpp"

namespace landclaim::pipeline {
using nlohmann::json;

namespace {

json ring_to_json(const Ring& ring) {
  json arr = json::array();
  for (const auto& p : ring) arr.push_back({p.lon, p.lat});
  return arr;
}

Ring ring_from_json(const json& arr) {
  Ring ring;
  ring.reserve(arr.size());
  for (const auto& p : arr) ring.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return ring;
}

json parse_or_throw(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what(), e.byte);
  }
}

}  // namespace

std::string features_to_json(std::span<const CourseFeature> features) {
  std::string out = "{\"features\":[\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    json polys = json::array();
    for (const auto& poly : f.polygons) {
      json rings = json::array({ring_to_json(poly.outer)});
      for (const auto& h : poly.holes) rings.push_back(ring_to_json(h));
      polys.push_back(std::move(rings));
    }
    json j = {{"id", f.source_id},
              {"name", f.name ? json(*f.name) : json(nullptr)},
              {"area_km2", f.area_km2},
              {"polygons", std::move(polys)}};
    out += j.dump();
    out += i + 1 < features.size() ? ",\n" : "\n";
  }
  out += "]}\n";
  return out;
}

std::vector<CourseFeature> features_from_json(std::string_view text) {
  const json doc = parse_or_throw(text, "features file");
  std::vector<CourseFeature> out;
  for (const auto& j : doc.at("features")) {
    CourseFeature f;
    f.source_id = j.at("id").get<std::string>();
    if (!j.at("name").is_null()) f.name = j.at("name").get<std::string>();
    f.area_km2 = j.at("area_km2").get<double>();
    for (const auto& rings : j.at("polygons")) {
      Polygon poly;
      for (std::size_t r = 0; r < rings.size(); ++r) {
        if (r == 0) {
          poly.outer = ring_from_json(rings[r]);
        } else {
          poly.holes.push_back(ring_from_json(rings[r]));
        }
      }
      f.polygons.push_back(std::move(poly));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string assignments_to_csv(std::span<const CourseFeature> features,
                               std::span<const std::string> iso3) {
  std::string out = "course_id,iso3\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    out += csv::escape(features[i].source_id) + "," + csv::escape(iso3[i]) + "\n";
  }
  return out;
}

std::map<std::string, std::string> assignments_from_csv(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = csv::split_record(line);
    if (f.size() != 2) throw ParseError("bad assignments row: " + line, 0);
    out[f[0]] = f[1];
  }
  return out;
}

std::string stats_to_json(const aggregate::StatsReport& stats) {
  json countries = json::array();
  for (const auto& c : stats.countries) {
    countries.push_back({{"iso3", c.iso3},
                         {"name", c.name},
                         {"course_count", c.course_count},
                         {"total_area_km2", c.total_area_km2},
                         {"mean_area_km2", c.mean_area_km2},
                         {"land_share", c.land_share}});
  }
  json doc = {{"countries", std::move(countries)},
              {"unassigned_count", stats.unassigned_count},
              {"unassigned_area_km2", stats.unassigned_area_km2}};
  return doc.dump(1) + "\n";
}

aggregate::StatsReport stats_from_json(std::string_view text) {
  const json doc = parse_or_throw(text, "stats file");
  aggregate::StatsReport stats;
  for (const auto& j : doc.at("countries")) {
    aggregate::CountryStats c;
    c.iso3 = j.at("iso3").get<std::string>();
    c.name = j.at("name").get<std::string>();
    c.course_count = j.at("course_count").get<std::size_t>();
    c.total_area_km2 = j.at("total_area_km2").get<double>();
    c.mean_area_km2 = j.at("mean_area_km2").get<double>();
    c.land_share = j.at("land_share").get<double>();
    stats.countries.push_back(std::move(c));
  }
  stats.unassigned_count = doc.at("unassigned_count").get<std::size_t>();
  stats.unassigned_area_km2 = doc.at("unassigned_area_km2").get<double>();
  return stats;
}

std::string placements_to_geojson(std::span<const placement::PlacementResult> results,
                                  double rated_power_mw) {
  std::string out = "{\"type\":\"FeatureCollection\",\"features\":[";
  bool first = true;
  for (const auto& r : results) {
    for (const auto& p : r.turbines) {
      json f = {{"type", "Feature"},
                {"geometry", {{"type", "Point"}, {"coordinates", {p.lon, p.lat}}}},
                {"properties",
                 {{"course_id", r.course_id},
                  {"spacing_m", r.spacing_m},
                  {"rated_power_mw", rated_power_mw}}}};
      out += first ? "\n" : ",\n";
      out += f.dump();
      first = false;
    }
  }
  out += "\n]}\n";
  return out;
}

std::vector<placement::PlacementResult> placements_from_geojson(std::string_view text) {
  const json doc = parse_or_throw(text, "placements GeoJSON");
  std::vector<placement::PlacementResult> out;
  for (const auto& f : doc.at("features")) {
    const auto& props = f.at("properties");
    const std::string id = props.at("course_id").get<std::string>();
    if (out.empty() || out.back().course_id != id) {
      placement::PlacementResult r;
      r.course_id = id;
      r.spacing_m = props.at("spacing_m").get<double>();
      out.push_back(std::move(r));
    }
    auto& r = out.back();
    const auto& c = f.at("geometry").at("coordinates");
    r.turbines.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    r.count = r.turbines.size();
    r.capacity_mw = static_cast<double>(r.count) * props.at("rated_power_mw").get<double>();
  }
  return out;
}

}  // namespace landclaim::pipeline
