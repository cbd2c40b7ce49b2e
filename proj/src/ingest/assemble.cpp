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

#include "landclaim/ingest/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "landclaim/geometry/area.hpp"
#include "landclaim/ingest/repair.hpp"

namespace landclaim::ingest {
namespace {

using Segment = std::vector<LonLat>;

bool near(LonLat a, LonLat b) {
  return std::abs(a.lon - b.lon) <= kSnapDegrees &&
         std::abs(a.lat - b.lat) <= kSnapDegrees;
}

using Key = std::pair<double, double>;
Key key_of(LonLat p) { return {p.lon, p.lat}; }

struct RoledRing {
  Ring ring;
  std::string role;  // "outer", "inner" or "" (decide by containment)
};

// Even-odd test in the lon/lat plane; boundary points report `false`.
bool contains_point(const Ring& ring, LonLat p) {
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

bool ring_inside(const Ring& inner, const Ring& outer) {
  // Prefer a vertex that is not shared with the outer ring; touching rings
  // are common in OSM.
  std::set<Key> outer_vertices;
  for (const auto& p : outer) outer_vertices.insert(key_of(p));
  for (const auto& p : inner) {
    if (!outer_vertices.count(key_of(p))) return contains_point(outer, p);
  }
  for (std::size_t i = 1; i < inner.size(); ++i) {
    const LonLat mid{0.5 * (inner[i - 1].lon + inner[i].lon),
                     0.5 * (inner[i - 1].lat + inner[i].lat)};
    if (!outer_vertices.count(key_of(mid))) return contains_point(outer, mid);
  }
  return false;
}

MultiPolygon build_polygons(std::vector<RoledRing> rings) {
  const std::size_t n = rings.size();
  std::vector<double> area(n);
  for (std::size_t i = 0; i < n; ++i) {
    area[i] = std::abs(geometry::ring_signed_area_m2(rings[i].ring));
  }
  std::vector<std::vector<bool>> inside(n, std::vector<bool>(n, false));
  std::vector<int> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && area[i] <= area[j] && ring_inside(rings[i].ring, rings[j].ring)) {
        inside[i][j] = true;
        ++depth[i];
      }
    }
  }

  std::vector<bool> is_outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rings[i].role == "outer") {
      is_outer[i] = true;
    } else if (rings[i].role == "inner") {
      is_outer[i] = false;
    } else {
      is_outer[i] = depth[i] % 2 == 0;
    }
  }
  // An inner ring that sits in no outer ring falls back to containment.
  for (std::size_t i = 0; i < n; ++i) {
    if (is_outer[i]) continue;
    bool has_parent = false;
    for (std::size_t j = 0; j < n; ++j) has_parent |= inside[i][j] && is_outer[j];
    if (!has_parent) is_outer[i] = true;
  }

  MultiPolygon polygons;
  std::map<std::size_t, std::size_t> polygon_of;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_outer[i]) continue;
    polygon_of[i] = polygons.size();
    polygons.push_back({rings[i].ring, {}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (is_outer[i]) continue;
    std::size_t parent = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (inside[i][j] && is_outer[j] && (parent == n || area[j] < area[parent])) {
        parent = j;
      }
    }
    polygons[polygon_of.at(parent)].holes.push_back(std::move(rings[i].ring));
  }
  return polygons;
}

bool assemble_roled(std::vector<Segment> segments, const std::string& role,
                    std::vector<RoledRing>& out) {
  std::vector<Ring> rings;
  if (!assemble_rings(std::move(segments), rings)) return false;
  for (auto& r : rings) out.push_back({std::move(r), role});
  return true;
}

std::optional<std::string> name_of(const RawElement& el) {
  auto it = el.tags.find("name");
  if (it == el.tags.end()) return std::nullopt;
  return it->second;
}

}  // namespace

bool assemble_rings(std::vector<std::vector<LonLat>> segments,
                    std::vector<Ring>& rings) {
  std::vector<Segment> open;
  for (auto& s : segments) {
    if (s.size() < 2) continue;
    if (s.front() == s.back()) {
      rings.push_back(std::move(s));
    } else {
      open.push_back(std::move(s));
    }
  }

  std::multimap<Key, std::size_t> by_endpoint;
  for (std::size_t i = 0; i < open.size(); ++i) {
    by_endpoint.emplace(key_of(open[i].front()), i);
    by_endpoint.emplace(key_of(open[i].back()), i);
  }
  std::vector<bool> used(open.size(), false);

  auto take = [&](std::size_t idx, const LonLat& tail, Ring& ring) {
    used[idx] = true;
    Segment& seg = open[idx];
    if (!(seg.front() == tail || (seg.back() != tail && near(seg.front(), tail)))) {
      std::reverse(seg.begin(), seg.end());
    }
    ring.insert(ring.end(), seg.begin() + 1, seg.end());
  };

  for (std::size_t start = 0; start < open.size(); ++start) {
    if (used[start]) continue;
    used[start] = true;
    Ring ring = open[start];
    while (true) {
      if (ring.front() == ring.back()) break;
      if (near(ring.front(), ring.back())) {
        ring.back() = ring.front();
        break;
      }
      const LonLat tail = ring.back();
      std::size_t next = open.size();
      auto [lo, hi] = by_endpoint.equal_range(key_of(tail));
      for (auto it = lo; it != hi; ++it) {
        if (!used[it->second]) {
          next = std::min(next, it->second);
        }
      }
      if (next == open.size()) {
        for (std::size_t k = 0; k < open.size(); ++k) {
          if (!used[k] && (near(open[k].front(), tail) || near(open[k].back(), tail))) {
            next = k;
            break;
          }
        }
      }
      if (next == open.size()) return false;
      take(next, tail, ring);
    }
    rings.push_back(std::move(ring));
  }
  return true;
}

AssemblyResult assemble_course_features(std::span<const RawElement> elements) {
  auto is_golf = [](const RawElement& el) {
    return el.has_tag("leisure", "golf_course");
  };

  std::vector<const RawElement*> relations;
  std::set<std::int64_t> member_ways;
  for (const auto& el : elements) {
    if (el.kind != ElementKind::relation || !is_golf(el)) continue;
    relations.push_back(&el);
    for (const auto& m : el.members) {
      if (m.kind == ElementKind::way) member_ways.insert(m.ref);
    }
  }
  std::sort(relations.begin(), relations.end(),
            [](const RawElement* a, const RawElement* b) { return a->id < b->id; });

  AssemblyResult result;
  auto skip = [&](const RawElement& el, std::string reason) {
    result.skipped.push_back({std::string(to_string(el.kind)),
                              std::to_string(el.id), std::move(reason)});
  };
  auto emit = [&](const RawElement& el, MultiPolygon polygons) {
    CourseFeature candidate{el.source_id(), name_of(el), std::move(polygons), 0.0};
    RepairResult repaired = validate_and_repair(std::move(candidate));
    if (!repaired.accepted()) {
      skip(el, repaired.rejection);
      return false;
    }
    result.features.push_back(std::move(*repaired.feature));
    return true;
  };

  std::set<std::int64_t> claimed_ways;
  for (const RawElement* rel : relations) {
    std::map<std::string, std::vector<Segment>> by_role;
    std::vector<Segment> all;
    std::set<std::int64_t> ways;
    bool incomplete = false;
    std::int64_t shared = 0;
    for (const auto& m : rel->members) {
      if (m.kind != ElementKind::way) continue;
      if (m.geometry.size() < 2) {
        incomplete = true;
        continue;
      }
      if (claimed_ways.count(m.ref)) shared = m.ref;
      ways.insert(m.ref);
      const std::string role =
          (m.role == "outer" || m.role == "inner") ? m.role : std::string();
      by_role[role].push_back(m.geometry);
      all.push_back(m.geometry);
    }
    if (incomplete) {
      skip(*rel, "member way without geometry");
      continue;
    }
    if (all.empty()) {
      skip(*rel, "relation without way members");
      continue;
    }
    if (shared != 0) {
      skip(*rel, "member way " + std::to_string(shared) +
                     " already counted in another relation");
      continue;
    }

    std::vector<RoledRing> rings;
    bool closed = true;
    for (auto& [role, segs] : by_role) {
      if (!assemble_roled(std::move(segs), role, rings)) {
        closed = false;
        break;
      }
    }
    if (!closed) {
      // Rings built from ways with mixed roles: assemble everything together
      // and classify purely by containment.
      rings.clear();
      closed = assemble_roled(std::move(all), "", rings);
    }
    if (!closed) {
      skip(*rel, "unclosable ring");
      continue;
    }
    if (emit(*rel, build_polygons(std::move(rings)))) {
      claimed_ways.insert(ways.begin(), ways.end());
    }
  }

  for (const auto& el : elements) {
    if (!is_golf(el)) continue;
    switch (el.kind) {
      case ElementKind::relation:
        break;
      case ElementKind::node:
        skip(el, "node-only element");
        break;
      case ElementKind::way: {
        if (member_ways.count(el.id)) break;  // counted via its relation
        Ring ring = el.geometry;
        if (ring.size() >= 2 && ring.front() != ring.back()) {
          if (!near(ring.front(), ring.back())) {
            skip(el, "open way");
            break;
          }
          ring.back() = ring.front();
        }
        emit(el, MultiPolygon{Polygon{std::move(ring), {}}});
        break;
      }
    }
  }

  std::sort(result.features.begin(), result.features.end(),
            [](const CourseFeature& a, const CourseFeature& b) {
              return a.source_id < b.source_id;
            });
  return result;
}

}  // namespace landclaim::ingest
