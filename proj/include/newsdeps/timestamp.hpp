// Copyright 2026 The NewsDeps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace newsdeps {

// An instant with second precision. The original RFC 3339 text is kept so
// that articles serialize back byte-for-byte.
class Timestamp {
 public:
  Timestamp() = default;

  // Parses an RFC 3339 date-time with a mandatory offset ("Z" or +hh:mm).
  // Fractional seconds are accepted and truncated.
  static std::optional<Timestamp> parse(std::string_view text);

  // Builds a timestamp from seconds since the Unix epoch, rendered in UTC.
  static Timestamp from_unix(std::int64_t seconds);

  std::int64_t unix_seconds() const { return seconds_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Timestamp& a, const Timestamp& b) {
    return a.seconds_ == b.seconds_;
  }
  friend std::strong_ordering operator<=>(const Timestamp& a,
                                          const Timestamp& b) {
    return a.seconds_ <=> b.seconds_;
  }

 private:
  std::int64_t seconds_ = 0;
  std::string text_;
};

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_utc(std::int64_t unix_seconds);

}  // namespace newsdeps
