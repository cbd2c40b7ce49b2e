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
#include <string>
#include <string_view>

namespace landclaim::ingest {

/// Global golf-course query (`out geom` inlines way and member geometry).
inline constexpr std::string_view kGolfCourseQuery =
    "[out:json][timeout:99999];\n"
    "nwr[\"leisure\"=\"golf_course\"];\n"
    "out geom;\n";

inline constexpr std::string_view kDefaultEndpoint =
    "https://overpass-api.de/api/interpreter";

/// `flag` if non-empty, else $OVERPASS_ENDPOINT, else kDefaultEndpoint.
std::string resolve_endpoint(std::string_view flag);

/// Cache file used for (endpoint, query): <cache_dir>/overpass-<sha256>.json.
std::filesystem::path overpass_cache_path(std::string_view query,
                                          std::string_view endpoint,
                                          const std::filesystem::path& cache_dir);

/// POSTs `query` to `endpoint` unless a cache entry exists. The response is
/// checked for a well-formed envelope, then written atomically (temp file
/// and rename). Throws FetchError on network/HTTP failure, ParseError on a
/// malformed body.
std::filesystem::path fetch_overpass(std::string_view query,
                                     std::string_view endpoint,
                                     const std::filesystem::path& cache_dir);

}  // namespace landclaim::ingest
