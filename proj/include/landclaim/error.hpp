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
#include <stdexcept>
#include <string>

namespace landclaim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameter, config value, or precondition violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input bytes could not be read as the expected format.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class FetchError : public Error {
 public:
  explicit FetchError(const std::string& what, int http_status = 0)
      : Error(what), http_status_(http_status) {}
  /// 0 when the request never produced an HTTP response.
  int http_status() const noexcept { return http_status_; }

 private:
  int http_status_;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace landclaim
