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

#include <map>
#include <sstream>

#include "tracegen/error.hpp"
#include "tracegen/footprint.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

LocalDateTime at(const char* s) { return *LocalDateTime::parse(s); }

EventForest one_node_forest(std::size_t n = 1) {
    EventForest f;
    for (std::size_t i = 0; i < n; ++i) {
        f.roots.push_back(i);
        f.nodes.push_back(EventNode{});
    }
    return f;
}

std::vector<Artifact> mixed_artifacts() {
    return {
        Artifact{Reminder{"Pay rent", at("2024-03-05T08:00:00"), std::nullopt}, 0, Direction::kSent},
        Artifact{Email{"Clinic", "desk@clinic.example", "me@example.com", at("2024-03-01T09:00:00"), "Visit", "See you"},
                 1, Direction::kReceived},
        Artifact{CalendarEntry{"Lunch; with Ana, Bo", at("2024-03-03T12:00:00"), at("2024-03-03T13:00:00"),
                               std::string("Cafe \\ Bar"), {}},
                 2, Direction::kSent},
        Artifact{Reminder{"Same time, later in input", at("2024-03-05T08:00:00"), std::nullopt}, 2, Direction::kSent},
    };
}

// Independent reader: unfolds CRLF + space continuations and returns logical lines.
std::vector<std::string> unfold(const std::string& ics) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < ics.size()) {
        const auto end = ics.find("\r\n", pos);
        REQUIRE(end != std::string::npos);
        const auto physical = ics.substr(pos, end - pos);
        CHECK(physical.size() <= 75);
        if (!physical.empty() && physical[0] == ' ') {
            REQUIRE_FALSE(out.empty());
            out.back() += physical.substr(1);
        } else {
            out.push_back(physical);
        }
        pos = end + 2;
    }
    return out;
}

std::string unescape(const std::string& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == '\\' && i + 1 < v.size()) {
            ++i;
            out += v[i] == 'n' || v[i] == 'N' ? '\n' : v[i];
        } else {
            out += v[i];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("assemble sorts stably by primary time") {
    const auto fp = assemble("p0", testing::sample_profile(1), one_node_forest(3), mixed_artifacts());
    REQUIRE(fp.artifacts.size() == 4);
    CHECK(fp.artifacts[0].kind() == ArtifactKind::kEmail);
    CHECK(fp.artifacts[1].kind() == ArtifactKind::kCalendarEntry);
    CHECK(std::get<Reminder>(fp.artifacts[2].payload).title == "Pay rent");
    CHECK(std::get<Reminder>(fp.artifacts[3].payload).title == "Same time, later in input");
    for (std::size_t i = 1; i < fp.artifacts.size(); ++i) {
        CHECK(fp.artifacts[i - 1].primary_time() <= fp.artifacts[i].primary_time());
    }
}

TEST_CASE("dangling event ids are rejected") {
    try {
        assemble("p0", testing::sample_profile(1), one_node_forest(2), mixed_artifacts());
        FAIL("expected DanglingEventRef");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kDanglingEventRef);
        CHECK(e.details() == std::vector<std::string>{"2"});
    }
}

TEST_CASE("JSONL round trip") {
    const auto fp = assemble("persona-7", testing::sample_profile(1), one_node_forest(3), mixed_artifacts());
    const auto dir = testing::temp_dir("footprint-jsonl");
    CHECK(export_jsonl(fp, dir / "f.jsonl") == 4);
    const auto records = load_jsonl(dir / "f.jsonl");
    REQUIRE(records.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(records[i].persona_id == "persona-7");
        CHECK(records[i].artifact == fp.artifacts[i]);
    }
    const auto env = to_envelope("x", fp.artifacts[0]);
    CHECK(env["kind"] == "email");
    CHECK(env["direction"] == "received");
}

TEST_CASE("malformed envelopes") {
    auto env = to_envelope("x", mixed_artifacts()[0]);
    auto bad = env;
    bad.erase("payload");
    CHECK_THROWS_AS(from_envelope(bad), Error);
    bad = env;
    bad["kind"] = "fax";
    CHECK_THROWS_AS(from_envelope(bad), Error);
    bad = env;
    bad["event_id"] = -1;
    CHECK_THROWS_AS(from_envelope(bad), Error);
    const auto dir = testing::temp_dir("footprint-bad");
    write_file(dir / "x.jsonl", "{not json\n");
    try {
        load_jsonl(dir / "x.jsonl");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kParseError);
    }
}

TEST_CASE("ICS export escapes and folds") {
    auto artifacts = mixed_artifacts();
    const std::string long_title = "Très long titre " + std::string(120, 'x') + " é";
    artifacts.push_back(Artifact{CalendarEntry{long_title, at("2024-03-09T18:00:00"), at("2024-03-09T20:30:00"),
                                               std::nullopt, {}},
                                 0, Direction::kSent});
    const auto ics = to_ics("p0", artifacts);
    const auto lines = unfold(ics);
    CHECK(lines.front() == "BEGIN:VCALENDAR");
    CHECK(lines.back() == "END:VCALENDAR");
    std::vector<std::map<std::string, std::string>> events;
    for (const auto& l : lines) {
        if (l == "BEGIN:VEVENT") events.emplace_back();
        const auto colon = l.find(':');
        if (!events.empty() && colon != std::string::npos) events.back()[l.substr(0, colon)] = l.substr(colon + 1);
    }
    REQUIRE(events.size() == 2);
    CHECK(unescape(events[0]["SUMMARY"]) == "Lunch; with Ana, Bo");
    CHECK(unescape(events[0]["LOCATION"]) == "Cafe \\ Bar");
    CHECK(events[0]["DTSTART"] == "20240303T120000");
    CHECK(events[0]["DTEND"] == "20240303T130000");
    CHECK(unescape(events[1]["SUMMARY"]) == long_title);
    CHECK(events[1].count("LOCATION") == 0);
    CHECK(events[0]["UID"] != events[1]["UID"]);
}

TEST_CASE("folding never splits a UTF-8 sequence") {
    std::string line = "SUMMARY:";
    for (int i = 0; i < 60; ++i) line += "é";
    for (const auto& piece : ics_fold(line)) {
        CHECK(piece.size() <= 75);
        const auto body = piece[0] == ' ' ? piece.substr(1) : piece;
        CHECK((static_cast<unsigned char>(body.front()) & 0xC0) != 0x80);
    }
    CHECK(ics_escape("a\r\nb\nc") == "a\\nb\\nc");
}

TEST_CASE("ICS event count") {
    const auto fp = assemble("p0", testing::sample_profile(1), one_node_forest(3), mixed_artifacts());
    const auto dir = testing::temp_dir("footprint-ics");
    CHECK(export_ics(fp, dir / "c.ics") == 1);
}
