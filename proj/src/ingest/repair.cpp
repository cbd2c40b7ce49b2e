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

#include "landclaim/ingest/repair.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "landclaim/geometry/area.hpp"
#include "landclaim/ingest/assemble.hpp"

namespace landclaim::ingest {
namespace {

enum class RingStatus { ok, dropped, out_of_range, unclosed };

bool within_snap(LonLat a, LonLat b) {
  return std::abs(a.lon - b.lon) < kSnapDegrees &&
         std::abs(a.lat - b.lat) < kSnapDegrees;
}

RingStatus clean_ring(Ring& ring) {
  for (const auto& p : ring) {
    if (!(p.lon >= -180.0 && p.lon <= 180.0 && p.lat >= -90.0 && p.lat <= 90.0)) {
      return RingStatus::out_of_range;
    }
  }
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  if (ring.size() >= 2 && ring.front() != ring.back()) {
    if (!within_snap(ring.front(), ring.back())) return RingStatus::unclosed;
    ring.back() = ring.front();
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  }
  std::set<std::pair<double, double>> distinct;
  for (const auto& p : ring) distinct.emplace(p.lon, p.lat);
  if (distinct.size() < 3) return RingStatus::dropped;
  return RingStatus::ok;
}

double orient(LonLat a, LonLat b, LonLat c) {
  return (b.lon - a.lon) * (c.lat - a.lat) - (b.lat - a.lat) * (c.lon - a.lon);
}

bool on_segment(LonLat a, LonLat b, LonLat p) {
  return std::min(a.lon, b.lon) <= p.lon && p.lon <= std::max(a.lon, b.lon) &&
         std::min(a.lat, b.lat) <= p.lat && p.lat <= std::max(a.lat, b.lat);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool segments_touch(LonLat a, LonLat b, LonLat c, LonLat d) {
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool all_collinear(const Ring& ring) {
  const LonLat a = ring.front();
  auto b = std::find_if(ring.begin(), ring.end(), [&](LonLat p) { return p != a; });
  if (b == ring.end()) return true;
  return std::all_of(ring.begin(), ring.end(),
                     [&](LonLat p) { return orient(a, *b, p) == 0.0; });
}

}  // namespace

bool ring_self_intersects(const Ring& ring) {
  if (ring.size() < 4) return false;
  const std::size_t edges = ring.size() - 1;
  std::vector<std::size_t> order(edges);
  std::iota(order.begin(), order.end(), 0);
  auto min_x = [&](std::size_t i) { return std::min(ring[i].lon, ring[i + 1].lon); };
  auto max_x = [&](std::size_t i) { return std::max(ring[i].lon, ring[i + 1].lon); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return min_x(a) < min_x(b); });

  for (std::size_t oi = 0; oi < edges; ++oi) {
    const std::size_t i = order[oi];
    const double reach = max_x(i);
    for (std::size_t oj = oi + 1; oj < edges && min_x(order[oj]) <= reach; ++oj) {
      const std::size_t j = order[oj];
      const std::size_t lo = std::min(i, j);
      const std::size_t hi = std::max(i, j);
      const bool adjacent = hi - lo == 1 || (lo == 0 && hi == edges - 1);
      if (adjacent) {
        // Adjacent edges share one vertex; they only conflict if they fold
        // back over each other.
        const LonLat shared = hi - lo == 1 ? ring[hi] : ring[0];
        const LonLat p = hi - lo == 1 ? ring[lo] : ring[hi];
        const LonLat q = hi - lo == 1 ? ring[hi + 1] : ring[1];
        if (orient(p, shared, q) == 0.0 &&
            (p.lon - shared.lon) * (q.lon - shared.lon) +
                    (p.lat - shared.lat) * (q.lat - shared.lat) > 0.0) {
          return true;
        }
        continue;
      }
      if (segments_touch(ring[i], ring[i + 1], ring[j], ring[j + 1])) return true;
    }
  }
  return false;
}

RepairResult validate_and_repair(CourseFeature feature) {
  auto reject = [](std::string reason) {
    return RepairResult{std::nullopt, std::move(reason)};
  };

  MultiPolygon cleaned;
  for (auto& poly : feature.polygons) {
    switch (clean_ring(poly.outer)) {
      case RingStatus::out_of_range: return reject("coordinate out of range");
      case RingStatus::unclosed: return reject("unclosed ring");
      case RingStatus::dropped: continue;
      case RingStatus::ok: break;
    }
    if (all_collinear(poly.outer)) continue;
    if (ring_self_intersects(poly.outer)) return reject("self-intersection");

    Polygon out;
    out.outer = std::move(poly.outer);
    if (geometry::ring_signed_area_m2(out.outer) < 0.0) {
      std::reverse(out.outer.begin(), out.outer.end());
    }
    for (auto& hole : poly.holes) {
      switch (clean_ring(hole)) {
        case RingStatus::out_of_range: return reject("coordinate out of range");
        case RingStatus::unclosed: return reject("unclosed ring");
        case RingStatus::dropped: continue;
        case RingStatus::ok: break;
      }
      if (all_collinear(hole)) continue;
      if (geometry::ring_signed_area_m2(hole) > 0.0) {
        std::reverse(hole.begin(), hole.end());
      }
      out.holes.push_back(std::move(hole));
    }
    if (geometry::geodesic_area_km2(out) > 0.0) cleaned.push_back(std::move(out));
  }

  if (cleaned.empty()) return reject("zero area");
  feature.polygons = std::move(cleaned);
  feature.area_km2 = geometry::geodesic_area_km2(feature.polygons);
  return RepairResult{std::move(feature), {}};
}

}  // namespace landclaim::ingest
