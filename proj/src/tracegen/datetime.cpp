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

#include "tracegen/datetime.hpp"

#include <cstdio>

namespace tracegen {
namespace {

bool digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
    if (pos + n > s.size()) return false;
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return (m == 2 && is_leap(y)) ? 29 : kDays[m - 1];
}

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    y = static_cast<int>(static_cast<std::int64_t>(yoe) + era * 400 + (m <= 2));
}

}  // namespace

std::optional<LocalDateTime> LocalDateTime::parse(std::string_view s) {
    LocalDateTime t;
    if (s.size() < 19) return std::nullopt;
    if (!digits(s, 0, 4, t.year) || s[4] != '-' || !digits(s, 5, 2, t.month) || s[7] != '-' ||
        !digits(s, 8, 2, t.day)) {
        return std::nullopt;
    }
    if (s[10] != 'T') return std::nullopt;
    if (!digits(s, 11, 2, t.hour) || s[13] != ':' || !digits(s, 14, 2, t.minute) || s[16] != ':' ||
        !digits(s, 17, 2, t.second)) {
        return std::nullopt;
    }
    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        const std::size_t start = pos;
        std::uint64_t frac = 0;
        std::size_t n = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            if (n < 9) {
                frac = frac * 10 + static_cast<std::uint64_t>(s[pos] - '0');
                ++n;
            }
            ++pos;
        }
        if (pos == start) return std::nullopt;
        for (; n < 9; ++n) frac *= 10;
        t.nanos = static_cast<std::uint32_t>(frac);
    }
    if (pos != s.size()) return std::nullopt;
    if (t.month < 1 || t.month > 12) return std::nullopt;
    if (t.day < 1 || t.day > days_in_month(t.year, t.month)) return std::nullopt;
    if (t.hour > 23 || t.minute > 59 || t.second > 60) return std::nullopt;
    return t;
}

std::string LocalDateTime::to_string() const {
    char buf[48];
    if (nanos == 0) {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", year, month, day, hour, minute, second);
    } else {
        // Shortest of milli, micro, or nano precision that is exact.
        int digits = 9;
        std::uint32_t frac = nanos;
        while (digits > 3 && frac % 1000 == 0) {
            frac /= 1000;
            digits -= 3;
        }
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%0*u", year, month, day, hour, minute,
                      second, digits, frac);
    }
    return buf;
}

std::string LocalDateTime::to_ics() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d%02d%02dT%02d%02d%02d", year, month, day, hour, minute, second);
    return buf;
}

std::int64_t LocalDateTime::epoch_minutes() const {
    return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 1440 + hour * 60 +
           minute;
}

LocalDateTime LocalDateTime::from_epoch_minutes(std::int64_t minutes) {
    std::int64_t days = minutes / 1440;
    std::int64_t rem = minutes % 1440;
    if (rem < 0) {
        rem += 1440;
        --days;
    }
    LocalDateTime t;
    civil_from_days(days, t.year, t.month, t.day);
    t.hour = static_cast<int>(rem / 60);
    t.minute = static_cast<int>(rem % 60);
    return t;
}

LocalDateTime LocalDateTime::plus_minutes(std::int64_t minutes) const {
    LocalDateTime t = from_epoch_minutes(epoch_minutes() + minutes);
    t.second = second;
    t.nanos = nanos;
    return t;
}

}  // namespace tracegen
