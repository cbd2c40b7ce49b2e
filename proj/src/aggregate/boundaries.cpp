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

#include "landclaim/aggregate/boundaries.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "landclaim/error.hpp"
#include "landclaim/geometry/area.hpp"
#include "landclaim/geometry/representative_point.hpp"
#include "landclaim/io.hpp"

namespace landclaim::aggregate {
namespace {

using nlohmann::json;

Ring ring_from(const json& coords) {
  Ring ring;
  ring.reserve(coords.size());
  for (const auto& c : coords) {
    if (!c.is_array() || c.size() < 2) throw ParseError("bad GeoJSON position", 0);
    ring.push_back({c[0].get<double>(), c[1].get<double>()});
  }
  if (!ring.empty() && ring.front() != ring.back()) ring.push_back(ring.front());
  return ring;
}

Polygon polygon_from(const json& rings) {
  Polygon poly;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (i == 0) {
      poly.outer = ring_from(rings[i]);
    } else {
      poly.holes.push_back(ring_from(rings[i]));
    }
  }
  return poly;
}

MultiPolygon geometry_from(const json& geom) {
  MultiPolygon out;
  if (!geom.is_object()) return out;
  const std::string type = geom.value("type", "");
  const json& coords = geom.at("coordinates");
  if (type == "Polygon") {
    out.push_back(polygon_from(coords));
  } else if (type == "MultiPolygon") {
    for (const auto& p : coords) out.push_back(polygon_from(p));
  }
  return out;
}

std::string code_from(const json& props) {
  for (const char* key : {"iso3", "ISO_A3_EH", "ISO_A3", "ADM0_A3"}) {
    auto it = props.find(key);
    if (it == props.end() || !it->is_string()) continue;
    const std::string v = it->get<std::string>();
    if (!v.empty() && v != "-99") return v;
  }
  return {};
}

std::string name_from(const json& props) {
  for (const char* key : {"name", "NAME", "ADMIN"}) {
    auto it = props.find(key);
    if (it != props.end() && it->is_string()) return it->get<std::string>();
  }
  return {};
}

bool in_ring(const Ring& ring, LonLat p) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const LonLat& a = ring[i];
    const LonLat& b = ring[j];
    if ((a.lat > p.lat) != (b.lat > p.lat)) {
      const double x = a.lon + (p.lat - a.lat) * (b.lon - a.lon) / (b.lat - a.lat);
      if (p.lon < x) inside = !inside;
    }
  }
  return inside;
}

bool in_polygon(const Polygon& poly, LonLat p) {
  if (!in_ring(poly.outer, p)) return false;
  return std::none_of(poly.holes.begin(), poly.holes.end(),
                      [&](const Ring& h) { return in_ring(h, p); });
}

}  // namespace

std::vector<CountryBoundary> parse_boundaries_geojson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid boundaries GeoJSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("features") || !doc["features"].is_array()) {
    throw ParseError("boundaries GeoJSON must be a FeatureCollection", 0);
  }

  std::map<std::string, CountryBoundary> merged;
  std::map<std::string, double> declared_area;
  for (const auto& f : doc["features"]) {
    const json props = f.value("properties", json::object());
    const std::string code = code_from(props);
    if (code.empty() || !f.contains("geometry")) continue;
    MultiPolygon polys = geometry_from(f["geometry"]);
    if (polys.empty()) continue;

    CountryBoundary& c = merged[code];
    c.iso3 = code;
    if (c.name.empty()) c.name = name_from(props);
    for (auto& p : polys) c.polygons.push_back(std::move(p));
    if (auto it = props.find("land_area_km2"); it != props.end() && it->is_number()) {
      declared_area[code] += it->get<double>();
    }
  }

  std::vector<CountryBoundary> out;
  out.reserve(merged.size());
  for (auto& [code, c] : merged) {
    auto it = declared_area.find(code);
    c.land_area_km2 = (it != declared_area.end() && it->second > 0.0)
                          ? it->second
                          : geometry::geodesic_area_km2(c.polygons);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CountryBoundary> load_boundaries_geojson(const std::filesystem::path& path) {
  return parse_boundaries_geojson(read_file(path));
}

CountryIndex::CountryIndex(std::vector<CountryBoundary> boundaries)
    : boundaries_(std::move(boundaries)) {
  std::sort(boundaries_.begin(), boundaries_.end(),
            [](const auto& a, const auto& b) { return a.iso3 < b.iso3; });
  std::vector<geometry::BBoxIndex::Entry> entries;
  for (std::size_t c = 0; c < boundaries_.size(); ++c) {
    const auto& b = boundaries_[c];
    if (c > 0 && boundaries_[c - 1].iso3 == b.iso3) {
      throw ValidationError("duplicate country code " + b.iso3);
    }
    if (!(b.land_area_km2 > 0.0)) {
      throw ValidationError("country " + b.iso3 + " has no land area");
    }
    for (std::size_t p = 0; p < b.polygons.size(); ++p) {
      entries.push_back({bounds_of(b.polygons[p].outer),
                         static_cast<std::uint32_t>(owners_.size())});
      owners_.push_back({c, p});
    }
  }
  index_ = geometry::BBoxIndex::build(std::move(entries));
}

std::optional<std::size_t> CountryIndex::locate(LonLat p) const {
  const auto hits = index_.query(BBox{p.lon, p.lat, p.lon, p.lat});
  std::optional<std::size_t> best;
  for (std::uint32_t id : hits) {
    const Owner& o = owners_[id];
    if (best && *best <= o.country) continue;
    if (in_polygon(boundaries_[o.country].polygons[o.polygon], p)) best = o.country;
  }
  return best;
}

std::string assign_country(LonLat representative, const CountryIndex& index) {
  auto hit = index.locate(representative);
  return hit ? index.boundaries()[*hit].iso3 : std::string(kUnassigned);
}

std::string assign_country(const CourseFeature& feature, const CountryIndex& index) {
  return assign_country(geometry::representative_point(feature), index);
}

}  // namespace landclaim::aggregate
