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

#include "tracegen/error.hpp"
#include "tracegen/json.hpp"
#include "tracegen/schema.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

Json valid_email() {
    return Json{{"sender_name", "Ana Ruiz"},   {"from_address", "ana@example.com"},
                {"to_address", "bo@example.org"}, {"send_time", "2024-05-01T08:00:00"},
                {"subject", "Lunch"},           {"body", "See you at noon."}};
}

bool has_field(const std::vector<Violation>& v, const std::string& field) {
    for (const auto& x : v) {
        if (x.field == field) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("every schema is registered by name and parses") {
    for (const auto id : kAllSchemas) {
        const auto name = schema_name(id);
        CHECK(schema_from_name(name) == id);
        CHECK(schema_document(id).is_object());
    }
    CHECK_FALSE(schema_from_name("nope"));
}

TEST_CASE("email contract has exactly six keys") {
    CHECK(validate(SchemaId::kEmail, valid_email()).empty());
    auto extra = valid_email();
    extra["cc"] = "x@example.com";
    CHECK_FALSE(validate(SchemaId::kEmail, extra).empty());
    auto missing = valid_email();
    missing.erase("subject");
    CHECK(has_field(validate(SchemaId::kEmail, missing), "subject"));
}

TEST_CASE("formats") {
    auto e = valid_email();
    e["send_time"] = "2024-05-01T08:00:00Z";
    CHECK(has_field(validate(SchemaId::kEmail, e), "send_time"));
    e = valid_email();
    e["from_address"] = "not an address";
    CHECK(has_field(validate(SchemaId::kEmail, e), "from_address"));
    e = valid_email();
    e["subject"] = "   ";
    CHECK(has_field(validate(SchemaId::kEmail, e), "subject"));
}

TEST_CASE("email address validation") {
    CHECK(is_valid_email_address("a.b+c@mail.example.com"));
    CHECK(is_valid_email_address("jürgen@beispiel.de"));
    CHECK_FALSE(is_valid_email_address("a@b"));
    CHECK_FALSE(is_valid_email_address("a..b@example.com"));
    CHECK_FALSE(is_valid_email_address("a@@example.com"));
    CHECK_FALSE(is_valid_email_address("@example.com"));
    CHECK_FALSE(is_valid_email_address("a@-x.com"));
}

TEST_CASE("enum, range and nested array items") {
    CHECK(validate(SchemaId::kArtifactChoice, Json{{"kind", "email"}, {"direction", "sent"}}).empty());
    CHECK_FALSE(validate(SchemaId::kArtifactChoice, Json{{"kind", "fax"}, {"direction", "sent"}}).empty());

    Json thread{{"participants", {"A", "B"}},
                {"messages", Json::array({Json{{"sender", "A"}, {"send_time", "2024-01-01T10:00:00"}, {"text", ""}}})}};
    const auto v = validate(SchemaId::kMessageThread, thread);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().field.find("messages") != std::string::npos);
}

TEST_CASE("judge scores are bounded") {
    Json j;
    for (const char* k : {"Tone", "Fluency", "Coherence", "Informativeness", "Engagement"}) {
        j[k] = Json{{"score", 4}, {"explanation", "ok"}};
    }
    j["Overall"] = Json{{"score", 4}, {"summary", "fine"}};
    CHECK(validate(SchemaId::kJudge, j).empty());
    j["Tone"]["score"] = 6;
    CHECK_FALSE(validate(SchemaId::kJudge, j).empty());
}

TEST_CASE("published schema files match the registry") {
    const auto dir = testing::source_dir() / "docs" / "schemas";
    for (const auto id : kAllSchemas) {
        const auto path = dir / (std::string(schema_name(id)) + ".json");
        REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
        CHECK(Json::parse(read_file(path)) == schema_document(id));
    }
}
