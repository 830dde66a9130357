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

#include <set>

#include "tracegen/ablation.hpp"
#include "tracegen/footprint.hpp"
#include "tracegen/metrics.hpp"
#include "tracegen/pipeline.hpp"
#include "tracegen/schema.hpp"
#include "test_support.hpp"

using namespace tracegen;

TEST_CASE("kinds are filled round-robin") {
    const auto profile = testing::sample_profile(1);
    const auto emails = generate_ablated(profile, 10, 3);
    REQUIRE(emails.size() == 10);
    for (std::size_t i = 0; i < emails.size(); ++i) {
        CHECK(emails[i].event_id == i);
        CHECK(emails[i].kind() == ArtifactKind::kEmail);
        CHECK(emails[i].direction == Direction::kReceived);
        CHECK(validate(SchemaId::kEmail, payload_to_json(emails[i].payload)).empty());
        // Same template every five.
        if (i >= 5) {
            const auto& a = std::get<Email>(emails[i].payload).subject;
            const auto& b = std::get<Email>(emails[i - 5].payload).subject;
            if (i % 5 != 4) CHECK(a == b);
        }
    }
    CHECK(std::get<Email>(emails[0].payload).subject == "Appointment confirmation");
    CHECK(std::get<Email>(emails[1].payload).subject == "Your bill is ready");
}

TEST_CASE("deterministic in the seed") {
    const auto profile = testing::sample_profile(2);
    CHECK(generate_ablated(profile, 25, 9) == generate_ablated(profile, 25, 9));
    CHECK(generate_ablated(profile, 25, 9) != generate_ablated(profile, 25, 10));
    CHECK(generate_ablated(profile, 0, 9).empty());
}

TEST_CASE("no model calls") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 1);
    const auto before = gw->ledger().call_count();
    const auto cost = gw->ledger().total();
    generate_ablated(profile, 50, 1);
    CHECK(gw->ledger().call_count() == before);
    CHECK(gw->ledger().total() == cost);
}

TEST_CASE("emails go to the persona and time the event after sending") {
    const auto profile = testing::sample_profile(4);
    for (const auto& a : generate_ablated(profile, 15, 2)) {
        const auto& e = std::get<Email>(a.payload);
        CHECK(e.to_address == profile.email);
        CHECK(e.send_time.year >= 2023);
        CHECK(e.from_address.find("@example.com") != std::string::npos);
    }
}

TEST_CASE("template names") {
    std::set<std::string_view> names;
    for (const auto k : kAllTemplateKinds) names.insert(to_string(k));
    CHECK(names.size() == 5);
}

TEST_CASE("ablated corpus is less diverse than the agent corpus") {
    const auto dir = testing::temp_dir("ablation-entropy");
    RunConfig config;
    config.seed = 3;
    config.personas = 2;
    config.out = dir;
    const auto report = cmd_generate(config);
    REQUIRE(report.persona_dirs.size() == 2);
    std::vector<std::string> agent;
    for (const auto& d : report.persona_dirs) {
        for (const auto& r : load_jsonl(std::filesystem::path(d) / "footprint.jsonl")) {
            if (agent.size() < 200) agent.push_back(document_text(r.artifact));
        }
    }
    REQUIRE(agent.size() == 200);

    const auto profile = PersonaProfile::from_json(
        Json::parse(read_file(std::filesystem::path(report.persona_dirs[0]) / "profile.json")));
    std::vector<std::string> ablated;
    for (const auto& a : generate_ablated(profile, 200, 3)) ablated.push_back(document_text(a));

    auto gw = testing::mock_gateway();
    Embeddings ea, eb;
    for (const auto& d : agent) ea.push_back(gw->embed(d).values);
    for (const auto& d : ablated) eb.push_back(gw->embed(d).values);
    CHECK(remote_clique(eb) < remote_clique(ea));
    CHECK(entropy_grid(eb) < entropy_grid(ea));
}
