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

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "landclaim/error.hpp"
#include "landclaim/geometry/local_frame.hpp"
#include "landclaim/geometry/projected_course.hpp"
#include "landclaim/placement/placement.hpp"

using namespace landclaim;
using namespace landclaim::placement;
using geometry::geodesic_distance_m;

namespace {

// Hex lattice with pitch s anchored at (0, 0), kept inside [0, side]^2.
std::size_t oracle_square_count(double side, double s) {
  std::vector<XY> pts;
  const double h = s * std::sqrt(3.0) / 2.0;
  for (int row = 0; row * h <= side + 1e-9; ++row) {
    for (int col = 0;; ++col) {
      const double x = (row % 2 ? s / 2.0 : 0.0) + col * s;
      if (x > side + 1e-9) break;
      pts.push_back({x, row * h});
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      REQUIRE(std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) >= s - 1e-9);
    }
  }
  return pts.size();
}

// Smallest pairwise geodesic distance, pruned by latitude difference.
double min_pairwise_m(std::vector<LonLat> pts, double stop_m) {
  std::sort(pts.begin(), pts.end(), [](LonLat a, LonLat b) { return a.lat < b.lat; });
  const double stop_deg = stop_m / kAuthalicRadiusM * 180.0 / M_PI;
  double best = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && pts[j].lat - pts[i].lat <= stop_deg; ++j) {
      best = std::min(best, geodesic_distance_m(pts[i], pts[j]));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("1000 m square at 500 m spacing") {
  REQUIRE(oracle_square_count(1000.0, 500.0) == 8);
  for (const LonLat c : {LonLat{0.0, 0.0}, LonLat{-2.0, 51.5}, LonLat{151.2, -33.9}}) {
    CAPTURE(c.lat);
    const auto course = testing::square_course(c, 1000.0);
    const auto pts = generate_candidate_lattice(course, 500.0);
    CHECK(pts.size() == 8);
    const auto r = place_turbines(course, {500.0, true}, TurbineSpec{});
    CHECK(r.count == 8);
    CHECK(r.capacity_mw == doctest::Approx(44.0));
    CHECK(r.turbines.size() == r.count);
  }
}

TEST_CASE("lattice rows for the square") {
  const LonLat c{0.0, 0.0};
  const auto course = testing::square_course(c, 1000.0);
  const geometry::ProjectedCourse pc(course);
  const auto pts = generate_candidate_lattice(pc, 500.0);
  REQUIRE(pts.size() == 8);
  std::map<long, int> rows;
  for (const XY& p : pts) ++rows[std::lround(p.y - pc.bounds().min_y)];
  CHECK(rows.size() == 3);
  CHECK(rows.begin()->second == 3);
  CHECK(rows.rbegin()->second == 3);
}

TEST_CASE("small courses") {
  const LonLat c{10.0, 50.0};
  SUBCASE("tiny course keeps one turbine") {
    const auto tiny = testing::square_course(c, std::sqrt(0.05) * 1000.0);
    CHECK(tiny.area_km2 == doctest::Approx(0.05).epsilon(1e-3));
    const auto r = place_turbines(tiny, {1500.0, true}, TurbineSpec{});
    CHECK(r.count == 1);
    CHECK(geometry::point_in_course(r.turbines[0], tiny));
  }
  SUBCASE("course between lattice points gets none") {
    const auto tri = testing::from_local(c, {{{0, 100}, {100, 0}, {100, 100}}});
    CHECK(generate_candidate_lattice(tri, 1500.0).empty());
    CHECK(place_turbines(tri, {1500.0, false}, TurbineSpec{}).count == 0);
    CHECK(place_turbines(tri, {1500.0, true}, TurbineSpec{}).count == 1);
  }
}

TEST_CASE("spacing and containment on random polygons") {
  std::mt19937_64 rng(2024);
  const double spacings[] = {250.0, 500.0, 1000.0, 1500.0};
  for (int i = 0; i < 1000; ++i) {
    const auto course = testing::random_course(rng, "way/" + std::to_string(i));
    const double s = spacings[i % 4];
    const auto pts = generate_candidate_lattice(course, s);
    for (const auto& p : pts) {
      if (!geometry::point_in_course(p, course)) {
        FAIL_CHECK("turbine outside course " << course.source_id);
        break;
      }
    }
    if (pts.size() > 1) CHECK(min_pairwise_m(pts, s) >= s - 1e-6);
  }
}

TEST_CASE("halving the spacing keeps every accepted point") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto course = testing::random_course(rng, "way/1");
    for (double s : {1500.0, 1000.0, 500.0}) {
      const auto coarse = generate_candidate_lattice(course, s);
      const auto fine = generate_candidate_lattice(course, s / 2.0);
      CHECK(fine.size() >= coarse.size());
      for (const auto& p : coarse) {
        if (std::find(fine.begin(), fine.end(), p) == fine.end()) {
          FAIL_CHECK("point lost when halving spacing " << s);
          break;
        }
      }
    }
  }
}

TEST_CASE("placement is deterministic") {
  std::mt19937_64 rng(4);
  const auto course = testing::random_course(rng, "way/1");
  const auto a = place_turbines(course, {500.0, true}, TurbineSpec{});
  const auto b = place_turbines(course, {500.0, true}, TurbineSpec{});
  CHECK(a.turbines == b.turbines);
}

TEST_CASE("placement validation") {
  CourseFeature flat;
  flat.source_id = "way/1";
  flat.polygons = {{testing::closed({{0, 0}, {0.01, 0}, {0.02, 0}}), {}}};
  CHECK_THROWS_AS(place_turbines(flat, {500.0, true}, TurbineSpec{}), ValidationError);
  const auto sq = testing::square_course({0, 0}, 1000);
  CHECK_THROWS_AS(place_turbines(sq, {0.0, true}, TurbineSpec{}), ValidationError);
  CHECK_THROWS_AS(place_turbines(sq, {500.0, true}, TurbineSpec{-1.0, 135.0}), ValidationError);
}

TEST_CASE("wind capacity") {
  CHECK(wind_capacity_mw({}) == 0.0);
  PlacementResult r;
  r.count = 3;
  r.capacity_mw = 3 * 5.5;
  CHECK(wind_capacity_mw(std::vector<PlacementResult>{r}) == doctest::Approx(16.5));

  std::mt19937_64 rng(8);
  std::vector<PlacementResult> all;
  for (int i = 0; i < 20; ++i) {
    all.push_back(place_turbines(testing::random_course(rng, "way/" + std::to_string(i)),
                                 {500.0, true}, TurbineSpec{}));
  }
  double by_course = 0.0;
  for (const auto& p : all) {
    CHECK(p.capacity_mw == doctest::Approx(p.count * 5.5));
    by_course += p.capacity_mw;
  }
  const std::vector<PlacementResult> first(all.begin(), all.begin() + 7);
  const std::vector<PlacementResult> rest(all.begin() + 7, all.end());
  CHECK(wind_capacity_mw(first) + wind_capacity_mw(rest) == doctest::Approx(by_course));
}
