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

#include "landclaim/geometry/bbox_index.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace landclaim::geometry {
namespace {

struct Slot {
  BBox box;
  std::uint32_t ref;
};

double center_x(const BBox& b) { return 0.5 * (b.min_x + b.max_x); }
double center_y(const BBox& b) { return 0.5 * (b.min_y + b.max_y); }

// Sort-tile-recursive order: vertical slices by x, each slice sorted by y.
void str_sort(std::vector<Slot>& slots, std::size_t node_size) {
  auto by_x = [](const Slot& a, const Slot& b) {
    const double ax = center_x(a.box);
    const double bx = center_x(b.box);
    return ax != bx ? ax < bx : a.ref < b.ref;
  };
  auto by_y = [](const Slot& a, const Slot& b) {
    const double ay = center_y(a.box);
    const double by = center_y(b.box);
    return ay != by ? ay < by : a.ref < b.ref;
  };
  std::sort(slots.begin(), slots.end(), by_x);
  const std::size_t leaves = (slots.size() + node_size - 1) / node_size;
  const auto slices = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(leaves))));
  const std::size_t slice_len = std::max<std::size_t>(1, slices * node_size);
  for (std::size_t start = 0; start < slots.size(); start += slice_len) {
    const std::size_t end = std::min(slots.size(), start + slice_len);
    std::sort(slots.begin() + static_cast<std::ptrdiff_t>(start),
              slots.begin() + static_cast<std::ptrdiff_t>(end), by_y);
  }
}

}  // namespace

BBoxIndex BBoxIndex::build(std::vector<Entry> entries, std::size_t node_size) {
  BBoxIndex index;
  index.node_size_ = std::max<std::size_t>(2, node_size);
  index.num_items_ = entries.size();
  if (entries.empty()) return index;

  std::vector<Slot> level;
  level.reserve(entries.size());
  for (const auto& e : entries) level.push_back({e.box, e.id});

  std::size_t level_start = 0;
  while (true) {
    str_sort(level, index.node_size_);
    index.level_starts_.push_back(level_start);
    for (const auto& s : level) {
      index.boxes_.push_back(s.box);
      index.refs_.push_back(s.ref);
    }
    if (level.size() == 1) break;

    std::vector<Slot> parents;
    for (std::size_t i = 0; i < level.size(); i += index.node_size_) {
      Slot parent{BBox{}, static_cast<std::uint32_t>(level_start + i)};
      const std::size_t end = std::min(level.size(), i + index.node_size_);
      for (std::size_t k = i; k < end; ++k) parent.box.extend(level[k].box);
      parents.push_back(parent);
    }
    level_start += level.size();
    level = std::move(parents);
  }
  index.level_starts_.push_back(index.boxes_.size());
  return index;
}

std::vector<std::uint32_t> BBoxIndex::query(const BBox& box) const {
  std::vector<std::uint32_t> out;
  if (boxes_.empty()) return out;

  const std::size_t top = level_starts_.size() - 2;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (slot, level)
  for (std::size_t s = level_starts_[top]; s < level_starts_[top + 1]; ++s) {
    stack.emplace_back(s, top);
  }
  while (!stack.empty()) {
    const auto [slot, lvl] = stack.back();
    stack.pop_back();
    if (!boxes_[slot].intersects(box)) continue;
    if (lvl == 0) {
      out.push_back(refs_[slot]);
      continue;
    }
    const std::size_t first = refs_[slot];
    const std::size_t end =
        std::min(level_starts_[lvl], first + node_size_);
    for (std::size_t c = first; c < end; ++c) stack.emplace_back(c, lvl - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace landclaim::geometry
