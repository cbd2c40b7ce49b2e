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
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "landclaim/course.hpp"
#include "landclaim/geometry/types.hpp"

namespace landclaim::testing {

/// Course whose rings are given in metres in a frame centred on `center`.
/// The first ring is the outer boundary, the rest are holes.
CourseFeature from_local(LonLat center, const std::vector<std::vector<XY>>& rings,
                         std::string id = "way/1");

/// Axis-aligned square of side `side_m` centred on `center`, drawn in the
/// same frame the pipeline uses for the course.
CourseFeature square_course(LonLat center, double side_m, std::string id = "way/1");

/// Star-shaped simple polygon, counterclockwise, `n` vertices.
std::vector<XY> random_star(std::mt19937_64& rng, int n, double r_min_m, double r_max_m);

/// Random star course somewhere on the globe (|lat| <= 70).
CourseFeature random_course(std::mt19937_64& rng, std::string id);

/// Builds an Overpass `out geom` response.
class OverpassBuilder {
 public:
  struct MemberSpec {
    std::int64_t ref;
    std::string role;
    Ring geometry;
  };
  OverpassBuilder& node(std::int64_t id, LonLat p, bool golf = true);
  OverpassBuilder& way(std::int64_t id, const Ring& geometry, bool golf = true,
                       const std::string& name = "");
  OverpassBuilder& relation(std::int64_t id, const std::vector<MemberSpec>& members,
                            bool golf = true);
  OverpassBuilder& raw(nlohmann::json element);
  std::string str() const;

 private:
  nlohmann::json elements_ = nlohmann::json::array();
};

Ring closed(const std::vector<LonLat>& pts);
Ring lonlat_box(double lon0, double lat0, double lon1, double lat1);

struct BoxCountry {
  std::string iso3;
  std::string name;
  double lon0, lat0, lon1, lat1;
  double land_area_km2 = 0.0;  // 0: leave the property out
};
std::string boundaries_geojson(const std::vector<BoxCountry>& countries);

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Three box countries with a handful of courses each and matching
/// reference data; used by the integration and acceptance tests.
struct SyntheticWorld {
  std::filesystem::path extract;
  std::filesystem::path boundaries;
  std::filesystem::path reference;
  std::size_t course_count = 0;
};
SyntheticWorld write_synthetic_world(const std::filesystem::path& dir, unsigned seed = 7,
                                     int courses_per_country = 12);

}  // namespace landclaim::testing
