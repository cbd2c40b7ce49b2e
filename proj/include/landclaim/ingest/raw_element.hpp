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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "landclaim/geometry/types.hpp"

namespace landclaim::ingest {

enum class ElementKind { node, way, relation };

std::string_view to_string(ElementKind kind);

struct Member {
  ElementKind kind = ElementKind::way;
  std::int64_t ref = 0;
  std::string role;
  std::vector<LonLat> geometry;  // one coordinate for node members
};

/// One element of an `out geom` Overpass response.
struct RawElement {
  ElementKind kind = ElementKind::node;
  std::int64_t id = 0;
  std::map<std::string, std::string> tags;
  std::vector<LonLat> geometry;  // node: one point; way: its polyline
  std::vector<Member> members;   // relations only

  std::string source_id() const;
  bool has_tag(const std::string& key, std::string_view value) const;
};

/// One line of the skip report CSV.
struct SkipRecord {
  std::string element_kind;
  std::string element_id;
  std::string reason;
  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

}  // namespace landclaim::ingest
