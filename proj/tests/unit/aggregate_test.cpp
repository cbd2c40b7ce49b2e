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

#include <doctest.h>

#include "fixtures.hpp"
#include "landclaim/aggregate/boundaries.hpp"
#include "landclaim/aggregate/comparison.hpp"
#include "landclaim/aggregate/reference.hpp"
#include "landclaim/aggregate/stats.hpp"
#include "landclaim/error.hpp"
#include "landclaim/geometry/area.hpp"

using namespace landclaim;
using namespace landclaim::aggregate;
using landclaim::testing::BoxCountry;

namespace {

std::vector<CountryBoundary> two_countries() {
  return parse_boundaries_geojson(testing::boundaries_geojson({
      {"BBB", "Bland", 1.0, 0.0, 2.0, 1.0, 5000.0},
      {"AAA", "Aland", 0.0, 0.0, 1.0, 1.0, 0.0},
  }));
}

CourseFeature course_at(double lon, double lat, double side_m, std::string id) {
  return testing::square_course({lon, lat}, side_m, std::move(id));
}

}  // namespace

TEST_CASE("boundaries") {
  const auto b = two_countries();
  REQUIRE(b.size() == 2);
  CountryIndex index(b);
  CHECK(index.boundaries()[0].iso3 == "AAA");
  CHECK(index.boundaries()[1].land_area_km2 == 5000.0);
  CHECK(index.boundaries()[0].land_area_km2 ==
        doctest::Approx(geometry::geodesic_area_km2(index.boundaries()[0].polygons)));

  SUBCASE("course well inside one country") {
    CHECK(assign_country(course_at(0.5, 0.5, 800, "way/1"), index) == "AAA");
    CHECK(assign_country(course_at(1.5, 0.5, 800, "way/2"), index) == "BBB");
  }
  SUBCASE("course straddling a border goes with its representative point") {
    // Mostly east of the 1° meridian.
    const auto f = testing::from_local({1.0, 0.5}, {{{-200, -300}, {1500, -300}, {1500, 300}, {-200, 300}}});
    CHECK(assign_country(f, index) == "BBB");
  }
  SUBCASE("course at sea") {
    CHECK(assign_country(course_at(-10.0, 0.5, 800, "way/3"), index) == kUnassigned);
  }
  SUBCASE("a point on a shared edge is never left unassigned") {
    CHECK(index.locate({1.0, 0.5}).has_value());
  }
}

TEST_CASE("boundary parsing rules") {
  const std::string text = R"({"type":"FeatureCollection","features":[
    {"type":"Feature","properties":{"ISO_A3":"-99","ADM0_A3":"KOS","NAME":"Kosovo"},
     "geometry":{"type":"Polygon","coordinates":[[[20,42],[21,42],[21,43],[20,43],[20,42]]]}},
    {"type":"Feature","properties":{"ISO_A3":"FRA","NAME":"France"},
     "geometry":{"type":"MultiPolygon","coordinates":[[[[0,45],[1,45],[1,46],[0,46],[0,45]]],
                                                       [[[5,45],[6,45],[6,46],[5,46],[5,45]]]]}},
    {"type":"Feature","properties":{"ISO_A3":"FRA","NAME":"France"},
     "geometry":{"type":"Polygon","coordinates":[[[-52,4],[-51,4],[-51,5],[-52,5],[-52,4]]]}}
  ]})";
  const auto b = parse_boundaries_geojson(text);
  REQUIRE(b.size() == 2);
  const auto fra = std::find_if(b.begin(), b.end(), [](const auto& c) { return c.iso3 == "FRA"; });
  REQUIRE(fra != b.end());
  CHECK(fra->polygons.size() == 3);
  CHECK(std::any_of(b.begin(), b.end(), [](const auto& c) { return c.iso3 == "KOS"; }));
  CHECK_THROWS(parse_boundaries_geojson("{"));
}

TEST_CASE("duplicate country codes are rejected") {
  std::vector<CountryBoundary> b = two_countries();
  b.push_back(b[0]);
  CHECK_THROWS_AS(CountryIndex{b}, ValidationError);
}

TEST_CASE("country stats") {
  const auto b = two_countries();
  SUBCASE("two courses of 1 and 3 km²") {
    CourseFeature a, c;
    a.source_id = "way/1";
    a.area_km2 = 1.0;
    c.source_id = "way/2";
    c.area_km2 = 3.0;
    const std::vector<CourseFeature> f{a, c};
    const std::vector<std::string> iso{"BBB", "BBB"};
    const auto s = country_stats(f, iso, b);
    REQUIRE(s.countries.size() == 1);
    CHECK(s.countries[0].course_count == 2);
    CHECK(s.countries[0].total_area_km2 == doctest::Approx(4.0));
    CHECK(s.countries[0].mean_area_km2 == doctest::Approx(2.0));
    CHECK(s.countries[0].land_share == doctest::Approx(4.0 / 5000.0));
    CHECK(s.countries[0].name == "Bland");
  }
  SUBCASE("no features") {
    const auto s = country_stats({}, {}, b);
    CHECK(s.countries.empty());
    CHECK(s.unassigned_count == 0);
  }
  SUBCASE("ordering and unassigned") {
    std::vector<CourseFeature> f(5);
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i].source_id = "way/" + std::to_string(i);
      f[i].area_km2 = 0.5;
    }
    const std::vector<std::string> iso{"BBB", "AAA", "unassigned", "AAA", "BBB"};
    const auto s = country_stats(f, iso, b);
    REQUIRE(s.countries.size() == 2);
    CHECK(s.countries[0].iso3 == "AAA");
    CHECK(s.unassigned_count == 1);
    CHECK(s.unassigned_area_km2 == doctest::Approx(0.5));
  }
}

TEST_CASE("reference table") {
  const std::string csv =
      "iso3,technology,year,capacity_mw,source_note\n"
      "USA,pv_utility,2023,1000.0,x\n"
      "USA,pv_utility,2028,\"2000.0\",\"note, with comma\"\n";
  const auto t = ReferenceTable::parse_csv(csv);
  CHECK(t.capacity_mw("USA", Technology::pv_utility, 2023) == 1000.0);
  CHECK(t.capacity_mw("USA", Technology::pv_utility, 2028) == 2000.0);
  CHECK_FALSE(t.capacity_mw("USA", Technology::wind_onshore, 2023));
  CHECK_THROWS(ReferenceTable::parse_csv("iso,tech\n"));
  CHECK_THROWS(ReferenceTable::parse_csv(
      "iso3,technology,year,capacity_mw,source_note\nUSA,pv_utility,2024,1,x\n"));
  CHECK_THROWS(ReferenceTable::parse_csv(
      "iso3,technology,year,capacity_mw,source_note\nUSA,pv_utility,2023,-1,x\n"));
  CHECK_THROWS(ReferenceTable::parse_csv(
      "iso3,technology,year,capacity_mw,source_note\nUSA,hydro,2023,1,x\n"));
  CHECK_THROWS(ReferenceTable::parse_csv(csv + "USA,pv_utility,2023,5,dup\n"));
}

TEST_CASE("shipped reference data") {
  const auto t = ReferenceTable::load_csv(LANDCLAIM_TEST_DATA_DIR "/reference_capacity.csv");
  const char* top10[] = {"USA", "GBR", "JPN", "CAN", "DEU", "AUS", "FRA", "KOR", "SWE", "CHN"};
  auto total = [&](Technology tech, int year, bool with_china) {
    double sum = 0.0;
    for (const char* c : top10) {
      if (!with_china && std::string(c) == "CHN") continue;
      sum += t.capacity_mw(c, tech, year).value();
    }
    return sum / 1000.0;
  };
  CHECK(total(Technology::pv_utility, 2023, true) == doctest::Approx(646.0));
  CHECK(total(Technology::pv_utility, 2023, false) == doctest::Approx(257.0));
  CHECK(total(Technology::pv_utility, 2028, false) == doctest::Approx(496.0));
  CHECK(total(Technology::wind_onshore, 2023, true) == doctest::Approx(702.0));
  CHECK(total(Technology::wind_onshore, 2023, false) == doctest::Approx(298.0));
  CHECK(total(Technology::wind_onshore, 2028, false) == doctest::Approx(443.0));
}

TEST_CASE("scenario comparison") {
  StatsReport stats;
  stats.countries = {{"AAA", "Aland", 3, 2.0, 2.0 / 3.0, 0.001},
                     {"BBB", "Bland", 2, 1.0, 0.5, 0.001},
                     {"CCC", "Cland", 1, 0.5, 0.5, 0.001}};
  const auto reference = ReferenceTable({
      {"AAA", Technology::pv_utility, 2023, 10.0, ""},
      {"AAA", Technology::pv_utility, 2028, 118.8, ""},
      {"BBB", Technology::pv_utility, 2023, 5.0, ""},
      {"AAA", Technology::wind_onshore, 2023, 1.0, ""},
      {"AAA", Technology::wind_onshore, 2028, 100.0, ""},
      {"BBB", Technology::wind_onshore, 2023, 1.0, ""},
      {"BBB", Technology::wind_onshore, 2028, 2.0, ""},
  });
  std::vector<WindTotals> wind = {{500.0, {{"AAA", 55.0}, {"BBB", 11.0}}},
                                  {1500.0, {{"AAA", 11.0}}}};
  ComparisonOptions options{2, {"AAA"}};
  const auto rows = scenario_comparison(stats, wind, capacity::PVConfig{}, reference, options);

  // 2 countries × (3 PV + 2 wind) + 2 aggregate blocks × 5.
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].iso3 == "AAA");
  CHECK(rows[0].scenario == "coverage_0.25");
  CHECK(rows[2].scenario == "coverage_0.75");
  CHECK(rows[2].potential_mw == doctest::Approx(118.8));
  CHECK(rows[2].meets_2028 == std::optional<bool>(true));  // equal counts as meeting
  CHECK(rows[3].scenario == "spacing_1500m");
  CHECK(rows[4].scenario == "spacing_500m");
  CHECK(rows[4].potential_mw == doctest::Approx(55.0));

  const auto& bbb_pv = rows[5];
  CHECK(bbb_pv.iso3 == "BBB");
  CHECK(bbb_pv.installed_2023_mw == 5.0);
  CHECK_FALSE(bbb_pv.projected_2028_mw);
  CHECK_FALSE(bbb_pv.meets_2028);
  CHECK(rows[8].potential_mw == 0.0);  // BBB has no 1500 m turbines

  CHECK(rows[10].iso3 == "TOP2");
  CHECK(rows[10].installed_2023_mw == doctest::Approx(15.0));
  CHECK_FALSE(rows[10].projected_2028_mw);  // BBB lacks a 2028 PV row
  CHECK(rows[14].scenario == "spacing_500m");
  CHECK(rows[14].potential_mw == doctest::Approx(66.0));
  CHECK(rows[14].projected_2028_mw == doctest::Approx(102.0));
  CHECK(rows[14].meets_2028 == std::optional<bool>(false));
  CHECK(rows[15].iso3 == "TOP2_EXCL_AAA");
  CHECK(rows[19].potential_mw == doctest::Approx(11.0));
  CHECK(rows[19].meets_2028 == std::optional<bool>(true));
}

TEST_CASE("wind totals partition the course sum") {
  std::vector<placement::PlacementResult> results(3);
  results[0] = {"way/1", 500, {}, 2, 11.0};
  results[1] = {"way/2", 500, {}, 1, 5.5};
  results[2] = {"way/3", 500, {}, 4, 22.0};
  const auto w = wind_by_country(500, results, {{"way/1", "AAA"}, {"way/2", "BBB"}});
  CHECK(w.mw_by_country.at("AAA") == 11.0);
  CHECK(w.mw_by_country.at("BBB") == 5.5);
  CHECK(w.mw_by_country.at("unassigned") == 22.0);
}

TEST_CASE("equivalence table") {
  StatsReport stats;
  stats.countries = {{"AAA", "Aland", 3, 30.0, 10.0, 0.001}, {"BBB", "Bland", 2, 1.0, 0.5, 0.001}};
  const auto reference = ReferenceTable({{"AAA", Technology::pv_utility, 2023, 1000.0, ""},
                                         {"BBB", Technology::pv_utility, 2023, 0.0, ""}});
  const auto rows = equivalence_table(stats, reference, 0.015, 10);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].equivalent_pv_area_km2 == doctest::Approx(15.0));
  CHECK(rows[0].golf_to_pv_ratio == doctest::Approx(2.0));
  CHECK_FALSE(rows[1].golf_to_pv_ratio);
}
