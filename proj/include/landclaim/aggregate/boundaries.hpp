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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landclaim/course.hpp"
#include "landclaim/geometry/bbox_index.hpp"

namespace landclaim::aggregate {

inline constexpr std::string_view kUnassigned = "unassigned";

struct CountryBoundary {
  std::string iso3;
  std::string name;
  MultiPolygon polygons;
  double land_area_km2 = 0.0;
};

/// Reads an admin-0 GeoJSON FeatureCollection (Natural Earth style).
/// The code is taken from the first usable property among iso3, ISO_A3_EH,
/// ISO_A3, ADM0_A3 ("-99" is skipped); features sharing a code are merged.
/// land_area_km2 comes from the property of that name when positive,
/// otherwise from the geodesic area of the geometry.
std::vector<CountryBoundary> parse_boundaries_geojson(std::string_view text);
std::vector<CountryBoundary> load_boundaries_geojson(const std::filesystem::path& path);

/// Country lookup over per-polygon bounding boxes.
class CountryIndex {
 public:
  /// Sorts boundaries by iso3; throws ValidationError on duplicate codes
  /// or non-positive land area.
  explicit CountryIndex(std::vector<CountryBoundary> boundaries);

  const std::vector<CountryBoundary>& boundaries() const { return boundaries_; }

  /// Index into boundaries() of the first country (by iso3) containing p.
  std::optional<std::size_t> locate(LonLat p) const;

 private:
  struct Owner {
    std::size_t country;
    std::size_t polygon;
  };
  std::vector<CountryBoundary> boundaries_;
  std::vector<Owner> owners_;
  geometry::BBoxIndex index_;
};

/// iso3 of the country containing the course's representative point, or
/// "unassigned".
std::string assign_country(const CourseFeature& feature, const CountryIndex& index);
std::string assign_country(LonLat representative, const CountryIndex& index);

}  // namespace landclaim::aggregate
