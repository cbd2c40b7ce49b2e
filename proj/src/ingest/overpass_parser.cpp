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

#include "landclaim/ingest/overpass_parser.hpp"

#include <fstream>
#include <optional>

#include <json.hpp>

#include "landclaim/error.hpp"

namespace landclaim::ingest {

using nlohmann::json;

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::node: return "node";
    case ElementKind::way: return "way";
    case ElementKind::relation: return "relation";
  }
  return "?";
}

std::string RawElement::source_id() const {
  return std::string(to_string(kind)) + "/" + std::to_string(id);
}

bool RawElement::has_tag(const std::string& key, std::string_view value) const {
  auto it = tags.find(key);
  return it != tags.end() && it->second == value;
}

namespace {

std::optional<ElementKind> kind_from(const json& j) {
  if (!j.is_string()) return std::nullopt;
  const auto& s = j.get_ref<const std::string&>();
  if (s == "node") return ElementKind::node;
  if (s == "way") return ElementKind::way;
  if (s == "relation") return ElementKind::relation;
  return std::nullopt;
}

std::optional<LonLat> coordinate_from(const json& j) {
  if (!j.is_object()) return std::nullopt;
  auto lat = j.find("lat");
  auto lon = j.find("lon");
  if (lat == j.end() || lon == j.end() || !lat->is_number() ||
      !lon->is_number()) {
    return std::nullopt;
  }
  return LonLat{lon->get<double>(), lat->get<double>()};
}

// Returns false (with `reason` set) for points that cannot be read.
bool read_geometry(const json& arr, std::vector<LonLat>& out,
                   std::string& reason) {
  if (!arr.is_array()) {
    reason = "geometry is not an array";
    return false;
  }
  out.reserve(arr.size());
  for (const auto& pt : arr) {
    auto c = coordinate_from(pt);
    if (!c) {
      reason = "incomplete geometry";
      return false;
    }
    out.push_back(*c);
  }
  return true;
}

class ElementCollector {
 public:
  explicit ElementCollector(ParseResult& result) : result_(result) {}

  void consume(const json& el) {
    auto type_it = el.find("type");
    const std::string type_name =
        (type_it != el.end() && type_it->is_string())
            ? type_it->get<std::string>()
            : std::string("?");
    auto id_it = el.find("id");
    const bool has_id = id_it != el.end() && id_it->is_number_integer();
    const std::string id_text = has_id ? std::to_string(id_it->get<std::int64_t>())
                                       : std::string("?");
    auto skip = [&](std::string reason) {
      result_.skipped.push_back({type_name, id_text, std::move(reason)});
    };

    if (type_it == el.end()) return skip("missing type");
    if (!has_id) return skip("missing id");
    auto kind = kind_from(*type_it);
    if (!kind) return skip("unsupported element type");

    RawElement raw;
    raw.kind = *kind;
    raw.id = id_it->get<std::int64_t>();
    if (auto tags = el.find("tags"); tags != el.end() && tags->is_object()) {
      for (const auto& [k, v] : tags->items()) {
        raw.tags.emplace(k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }

    std::string reason;
    switch (raw.kind) {
      case ElementKind::node: {
        auto c = coordinate_from(el);
        if (!c) return skip("missing coordinates");
        raw.geometry.push_back(*c);
        break;
      }
      case ElementKind::way: {
        auto geom = el.find("geometry");
        if (geom == el.end()) return skip("missing geometry");
        if (!read_geometry(*geom, raw.geometry, reason)) return skip(reason);
        if (raw.geometry.size() < 2) {
          return skip("geometry has fewer than 2 coordinates");
        }
        break;
      }
      case ElementKind::relation: {
        auto members = el.find("members");
        if (members == el.end() || !members->is_array() || members->empty()) {
          return skip("relation without members");
        }
        for (const auto& m : *members) {
          Member member;
          auto mkind = kind_from(m.value("type", json()));
          auto ref = m.find("ref");
          if (!mkind || ref == m.end() || !ref->is_number_integer()) {
            return skip("malformed member");
          }
          member.kind = *mkind;
          member.ref = ref->get<std::int64_t>();
          if (auto role = m.find("role"); role != m.end() && role->is_string()) {
            member.role = role->get<std::string>();
          }
          if (member.kind == ElementKind::node) {
            if (auto c = coordinate_from(m)) member.geometry.push_back(*c);
          } else if (auto geom = m.find("geometry"); geom != m.end()) {
            std::vector<LonLat> pts;
            if (read_geometry(*geom, pts, reason)) member.geometry = std::move(pts);
          }
          raw.members.push_back(std::move(member));
        }
        break;
      }
    }
    result_.elements.push_back(std::move(raw));
  }

 private:
  ParseResult& result_;
};

template <typename Input>
ParseResult parse_impl(Input&& input) {
  ParseResult result;
  ElementCollector collector(result);
  std::string top_key;
  bool saw_elements = false;

  json::parser_callback_t cb = [&](int depth, json::parse_event_t event,
                                   json& parsed) {
    if (depth == 1 && event == json::parse_event_t::key) {
      top_key = parsed.get<std::string>();
      return true;
    }
    if (depth == 1 && event == json::parse_event_t::array_start &&
        top_key == "elements") {
      saw_elements = true;
      return true;
    }
    if (depth == 2 && top_key == "elements") {
      if (event == json::parse_event_t::object_end) {
        collector.consume(parsed);
        return false;  // drop the element once converted
      }
      if (event == json::parse_event_t::value) {
        result.skipped.push_back({"?", "?", "element is not an object"});
        return false;
      }
    }
    return true;
  };

  json root;
  try {
    root = json::parse(std::forward<Input>(input), cb);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid Overpass response: ") + e.what(),
                     e.byte);
  }
  if (!root.is_object() || !saw_elements) {
    throw ParseError("Overpass response has no `elements` array", 0);
  }
  return result;
}

}  // namespace

ParseResult parse_overpass_elements(std::string_view raw) {
  return parse_impl(raw);
}

ParseResult parse_overpass_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open extract " + path.string());
  return parse_impl(in);
}

}  // namespace landclaim::ingest
