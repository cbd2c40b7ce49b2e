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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "landclaim/geometry/types.hpp"

namespace landclaim::geometry {

/// Static packed R-tree (sort-tile-recursive bulk load). Immutable after
/// build, so concurrent queries are safe.
class BBoxIndex {
 public:
  struct Entry {
    BBox box;
    std::uint32_t id = 0;
  };

  BBoxIndex() = default;
  static BBoxIndex build(std::vector<Entry> entries,
                         std::size_t node_size = 16);

  /// Ids of every entry whose box intersects `box` (touching counts),
  /// ascending.
  std::vector<std::uint32_t> query(const BBox& box) const;

  std::size_t size() const { return num_items_; }

 private:
  std::size_t node_size_ = 16;
  std::size_t num_items_ = 0;
  std::vector<BBox> boxes_;
  // For leaf slots the entry id; for inner slots the first child's slot.
  std::vector<std::uint32_t> refs_;
  // Slot index where each level starts; last element is boxes_.size().
  std::vector<std::size_t> level_starts_;
};

}  // namespace landclaim::geometry
