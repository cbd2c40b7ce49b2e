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

#include "landclaim/ingest/fetch.hpp"

#include <cctype>
#include <cstdlib>

#include <httplib.h>

#include "landclaim/error.hpp"
#include "landclaim/hash.hpp"
#include "landclaim/ingest/overpass_parser.hpp"
#include "landclaim/io.hpp"

namespace landclaim::ingest {
namespace fs = std::filesystem;

namespace {

struct Url {
  std::string scheme_host_port;
  std::string path;
};

Url split_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw FetchError("endpoint is not an absolute URL: " + std::string(url));
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, path_start)),
          std::string(url.substr(path_start))};
}

std::string form_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xf]);
    }
  }
  return out;
}

}  // namespace

std::string resolve_endpoint(std::string_view flag) {
  if (!flag.empty()) return std::string(flag);
  if (const char* env = std::getenv("OVERPASS_ENDPOINT"); env && *env) {
    return env;
  }
  return std::string(kDefaultEndpoint);
}

fs::path overpass_cache_path(std::string_view query, std::string_view endpoint,
                             const fs::path& cache_dir) {
  const std::string key = Sha256().field(endpoint).field(query).hex();
  return cache_dir / ("overpass-" + key + ".json");
}

fs::path fetch_overpass(std::string_view query, std::string_view endpoint,
                        const fs::path& cache_dir) {
  const fs::path target = overpass_cache_path(query, endpoint, cache_dir);
  if (fs::exists(target)) return target;

  const Url url = split_url(endpoint);
  httplib::Client client(url.scheme_host_port);
  client.set_connection_timeout(30);
  client.set_read_timeout(4 * 3600);
  client.set_follow_location(true);
  auto res = client.Post(url.path, "data=" + form_encode(query),
                         "application/x-www-form-urlencoded");
  if (!res) {
    throw FetchError("request to " + std::string(endpoint) +
                     " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw FetchError("Overpass returned HTTP " + std::to_string(res->status),
                     res->status);
  }
  // Validates the envelope; throws ParseError on a malformed body.
  (void)parse_overpass_elements(res->body);

  fs::create_directories(cache_dir);
  write_file_atomic(target, res->body);
  return target;
}

}  // namespace landclaim::ingest
