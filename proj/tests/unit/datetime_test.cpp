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

#include <doctest.h>

#include "tracegen/datetime.hpp"
#include "tracegen/random.hpp"

using namespace tracegen;

TEST_CASE("parse and print zone-less times") {
    const auto t = LocalDateTime::parse("2024-03-01T09:05:07");
    REQUIRE(t);
    CHECK(t->year == 2024);
    CHECK(t->minute == 5);
    CHECK(t->to_string() == "2024-03-01T09:05:07");
    CHECK(t->to_ics() == "20240301T090507");

    const auto frac = LocalDateTime::parse("2024-03-01T09:05:07.250");
    REQUIRE(frac);
    CHECK(frac->to_string() == "2024-03-01T09:05:07.250");
}

TEST_CASE("offsets and malformed values are rejected") {
    CHECK_FALSE(LocalDateTime::parse("2024-03-01T09:05:07Z"));
    CHECK_FALSE(LocalDateTime::parse("2024-03-01T09:05:07+02:00"));
    CHECK_FALSE(LocalDateTime::parse("2024-02-30T09:00:00"));
    CHECK_FALSE(LocalDateTime::parse("2024-03-01 09:00:00"));
    CHECK_FALSE(LocalDateTime::parse("2024-03-01T24:00:00"));
    CHECK_FALSE(LocalDateTime::parse(""));
    CHECK(LocalDateTime::parse("2024-02-29T00:00:00"));
    CHECK_FALSE(LocalDateTime::parse("2023-02-29T00:00:00"));
}

TEST_CASE("minute arithmetic crosses month and year boundaries") {
    const auto t = *LocalDateTime::parse("2023-12-31T23:30:00");
    CHECK(t.plus_minutes(45).to_string() == "2024-01-01T00:15:00");
    CHECK(t.plus_minutes(-60 * 24 * 365).to_string() == "2022-12-31T23:30:00");
}

TEST_CASE("epoch minutes round-trip") {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto m = static_cast<std::int64_t>(rng.below(200'000'000)) - 50'000'000;
        CHECK(LocalDateTime::from_epoch_minutes(m).epoch_minutes() == m);
    }
    CHECK(LocalDateTime{}.epoch_minutes() == 0);
}

TEST_CASE("ordering follows the calendar") {
    CHECK(*LocalDateTime::parse("2024-01-02T00:00:00") > *LocalDateTime::parse("2024-01-01T23:59:59"));
}
