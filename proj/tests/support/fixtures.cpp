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

#include "fixtures.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>

#include <unistd.h>

#include "landclaim/geometry/area.hpp"
#include "landclaim/geometry/local_frame.hpp"

namespace landclaim::testing {
namespace fs = std::filesystem;
using nlohmann::json;

CourseFeature from_local(LonLat center, const std::vector<std::vector<XY>>& rings,
                         std::string id) {
  const geometry::LocalFrame frame(center);
  Polygon poly;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    Ring ring;
    for (const XY& p : rings[r]) ring.push_back(frame.unproject(p));
    ring.push_back(ring.front());
    if (r == 0) {
      poly.outer = std::move(ring);
    } else {
      poly.holes.push_back(std::move(ring));
    }
  }
  CourseFeature f;
  f.source_id = std::move(id);
  f.polygons.push_back(std::move(poly));
  f.area_km2 = geometry::geodesic_area_km2(f.polygons);
  return f;
}

CourseFeature square_course(LonLat center, double side_m, std::string id) {
  const double h = side_m / 2.0;
  return from_local(center, {{{-h, -h}, {h, -h}, {h, h}, {-h, h}}}, std::move(id));
}

std::vector<XY> random_star(std::mt19937_64& rng, int n, double r_min_m, double r_max_m) {
  std::uniform_real_distribution<double> radius(r_min_m, r_max_m);
  std::uniform_real_distribution<double> jitter(0.1, 0.9);
  std::vector<XY> pts;
  const double step = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    const double a = step * (i + jitter(rng));
    const double r = radius(rng);
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return pts;
}

CourseFeature random_course(std::mt19937_64& rng, std::string id) {
  std::uniform_real_distribution<double> lon(-179.0, 179.0);
  std::uniform_real_distribution<double> lat(-70.0, 70.0);
  std::uniform_int_distribution<int> vertices(3, 40);
  std::uniform_real_distribution<double> r_max(300.0, 3000.0);
  const double hi = r_max(rng);
  return from_local({lon(rng), lat(rng)}, {random_star(rng, vertices(rng), 0.2 * hi, hi)},
                    std::move(id));
}

namespace {

json coords(const Ring& ring) {
  json arr = json::array();
  for (const auto& p : ring) arr.push_back({{"lat", p.lat}, {"lon", p.lon}});
  return arr;
}

json golf_tags(bool golf, const std::string& name = "") {
  json tags = json::object();
  if (golf) tags["leisure"] = "golf_course";
  if (!name.empty()) tags["name"] = name;
  return tags;
}

}  // namespace

OverpassBuilder& OverpassBuilder::node(std::int64_t id, LonLat p, bool golf) {
  elements_.push_back(
      {{"type", "node"}, {"id", id}, {"lat", p.lat}, {"lon", p.lon}, {"tags", golf_tags(golf)}});
  return *this;
}

OverpassBuilder& OverpassBuilder::way(std::int64_t id, const Ring& geometry, bool golf,
                                      const std::string& name) {
  elements_.push_back({{"type", "way"},
                       {"id", id},
                       {"tags", golf_tags(golf, name)},
                       {"geometry", coords(geometry)}});
  return *this;
}

OverpassBuilder& OverpassBuilder::relation(std::int64_t id,
                                           const std::vector<MemberSpec>& members, bool golf) {
  json ms = json::array();
  for (const auto& m : members) {
    ms.push_back({{"type", "way"}, {"ref", m.ref}, {"role", m.role}, {"geometry", coords(m.geometry)}});
  }
  json tags = golf_tags(golf);
  tags["type"] = "multipolygon";
  elements_.push_back({{"type", "relation"}, {"id", id}, {"tags", tags}, {"members", ms}});
  return *this;
}

OverpassBuilder& OverpassBuilder::raw(json element) {
  elements_.push_back(std::move(element));
  return *this;
}

std::string OverpassBuilder::str() const {
  json doc = {{"version", 0.6}, {"generator", "fixture"}, {"elements", elements_}};
  return doc.dump();
}

Ring closed(const std::vector<LonLat>& pts) {
  Ring r(pts);
  r.push_back(pts.front());
  return r;
}

Ring lonlat_box(double lon0, double lat0, double lon1, double lat1) {
  return closed({{lon0, lat0}, {lon1, lat0}, {lon1, lat1}, {lon0, lat1}});
}

std::string boundaries_geojson(const std::vector<BoxCountry>& countries) {
  json features = json::array();
  for (const auto& c : countries) {
    json ring = json::array();
    for (const auto& p : lonlat_box(c.lon0, c.lat0, c.lon1, c.lat1)) ring.push_back({p.lon, p.lat});
    json props = {{"ISO_A3", c.iso3}, {"NAME", c.name}};
    if (c.land_area_km2 > 0.0) props["land_area_km2"] = c.land_area_km2;
    features.push_back({{"type", "Feature"},
                        {"properties", props},
                        {"geometry", {{"type", "Polygon"}, {"coordinates", {ring}}}}});
  }
  return json({{"type", "FeatureCollection"}, {"features", features}}).dump();
}

fs::path temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() /
                       ("landclaim-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

SyntheticWorld write_synthetic_world(const fs::path& dir, unsigned seed,
                                     int courses_per_country) {
  const std::vector<BoxCountry> countries = {
      {"AAA", "Aland", 0.0, 40.0, 4.0, 44.0, 0.0},
      {"BBB", "Bland", 4.0, 40.0, 8.0, 44.0, 90000.0},
      {"CCC", "Cland", 0.0, 44.0, 8.0, 48.0, 0.0},
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.1, 0.9);
  std::uniform_int_distribution<int> vertices(4, 16);
  std::uniform_real_distribution<double> size(400.0, 2500.0);

  OverpassBuilder b;
  std::int64_t id = 1000;
  std::size_t count = 0;
  for (std::size_t c = 0; c < countries.size(); ++c) {
    const auto& box = countries[c];
    // Country c gets courses_per_country - c courses so ranks are distinct.
    for (int i = 0; i < courses_per_country - static_cast<int>(c); ++i) {
      const LonLat center{box.lon0 + (box.lon1 - box.lon0) * unit(rng),
                          box.lat0 + (box.lat1 - box.lat0) * unit(rng)};
      const double hi = size(rng);
      const geometry::LocalFrame frame(center);
      Ring ring;
      for (const XY& p : random_star(rng, vertices(rng), 0.3 * hi, hi)) {
        ring.push_back(frame.unproject(p));
      }
      ring.push_back(ring.front());
      if (i % 5 == 4) {
        // Split the ring into two open ways joined by a relation.
        const std::size_t mid = ring.size() / 2;
        Ring a(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(mid) + 1);
        Ring bseg(ring.begin() + static_cast<std::ptrdiff_t>(mid), ring.end());
        b.relation(id++, {{id++, "outer", a}, {id++, "outer", bseg}});
      } else {
        b.way(id++, ring, true, "Course " + std::to_string(id));
      }
      ++count;
    }
  }
  // One tagged node and one course out at sea.
  b.node(id++, {2.0, 42.0});
  b.way(id++, lonlat_box(-30.0, 10.0, -29.999, 10.001));
  ++count;

  SyntheticWorld w;
  w.extract = dir / "extract.json";
  w.boundaries = dir / "boundaries.geojson";
  w.reference = dir / "reference.csv";
  w.course_count = count;
  write_text(w.extract, b.str());
  write_text(w.boundaries, boundaries_geojson(countries));
  write_text(w.reference,
             "iso3,technology,year,capacity_mw,source_note\n"
             "AAA,pv_utility,2023,100.0,fixture\n"
             "AAA,pv_utility,2028,250.0,fixture\n"
             "AAA,wind_onshore,2023,40.0,fixture\n"
             "AAA,wind_onshore,2028,80.0,fixture\n"
             "BBB,pv_utility,2023,5.0,fixture\n"
             "BBB,wind_onshore,2023,9000.0,fixture\n"
             "BBB,wind_onshore,2028,12000.0,fixture\n");
  return w;
}

}  // namespace landclaim::testing
