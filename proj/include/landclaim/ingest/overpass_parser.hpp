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
#include <string_view>
#include <vector>

#include "landclaim/ingest/raw_element.hpp"

namespace landclaim::ingest {

struct ParseResult {
  std::vector<RawElement> elements;
  std::vector<SkipRecord> skipped;
};

/// Reads the `elements` array of an Overpass JSON response. Elements are
/// converted as they stream past, so the document is never held in memory
/// as a whole. Element-level problems land in `skipped`; a syntax error or
/// missing `elements` array throws ParseError with the byte offset.
ParseResult parse_overpass_elements(std::string_view raw);
ParseResult parse_overpass_file(const std::filesystem::path& path);

}  // namespace landclaim::ingest
