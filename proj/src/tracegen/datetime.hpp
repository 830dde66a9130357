// Copyright 2026 The tracegen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tracegen {

// A floating wall-clock time: RFC 3339 date-time with no offset, e.g.
// "2024-03-01T09:00:00" or "2024-03-01T09:00:00.250".
struct LocalDateTime {
    int year = 1970;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;
    std::uint32_t nanos = 0;

    auto operator<=>(const LocalDateTime&) const = default;

    // Parses the zone-less form. Rejects offsets and "Z".
    static std::optional<LocalDateTime> parse(std::string_view s);

    // Canonical "YYYY-MM-DDTHH:MM:SS"; a nonzero fraction gets 3, 6 or 9 digits.
    std::string to_string() const;

    // RFC 5545 floating DATE-TIME, "YYYYMMDDTHHMMSS".
    std::string to_ics() const;

    LocalDateTime plus_minutes(std::int64_t minutes) const;

    // Minutes since 1970-01-01T00:00 on the proleptic Gregorian calendar.
    std::int64_t epoch_minutes() const;
    static LocalDateTime from_epoch_minutes(std::int64_t minutes);
};

inline bool is_local_datetime(std::string_view s) { return LocalDateTime::parse(s).has_value(); }

}  // namespace tracegen
