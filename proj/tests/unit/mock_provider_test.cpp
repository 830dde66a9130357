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

#include <cmath>

#include "tracegen/error.hpp"
#include "tracegen/events.hpp"
#include "tracegen/json_extract.hpp"
#include "tracegen/mock_provider.hpp"
#include "tracegen/prompts.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    return dot / std::sqrt(na * nb);
}

ExpandedEvent sample_event() {
    return ExpandedEvent::from_json(Json{{"event", "Dentist appointment"},
                                         {"detailed_description", "Routine cleaning at the dental clinic."},
                                         {"frequency", "once"},
                                         {"location", "Riverside Dental"},
                                         {"other_participants", Json::array()},
                                         {"start_time", "2024-04-03T10:00:00"},
                                         {"end_time", "2024-04-03T11:00:00"}});
}

}  // namespace

TEST_CASE("responses are a pure function of prompt and seed") {
    MockProvider a(MockOptions{.seed = 3});
    MockProvider b(MockOptions{.seed = 3});
    MockProvider c(MockOptions{.seed = 4});
    const auto req = prompts::seed_events("A nurse who coaches soccer.", 5);
    CHECK(a.respond(req) == b.respond(req));
    CHECK(a.respond(req) != c.respond(req));
    CHECK(a.id() == "mock-v1/seed-3");
}

TEST_CASE("every structured answer satisfies its schema") {
    MockProvider mock;
    const auto profile = testing::sample_profile(2);
    const auto event = sample_event();
    const auto pj = profile.to_json();
    const auto ej = event.to_json();
    std::vector<GenerationRequest> requests = {
        prompts::profile(Json{{"age", "25-34"}}),
        prompts::seed_events("A teacher who runs marathons.", 8),
        prompts::align_event(Json{{"event", "Gym session"}, {"detailed_description", "Workout"}, {"frequency", "weekly"}}, pj),
        prompts::expand_event(ej, pj),
        prompts::reflect_event(ej, pj),
        prompts::choose_artifact(ej, pj),
        prompts::critique(CriticAxis::kRealismFluency, ArtifactKind::kEmail, Json::object(), ej, pj),
        prompts::judge("Hello there, see you tomorrow."),
    };
    for (const auto kind : {ArtifactKind::kEmail, ArtifactKind::kMessageThread, ArtifactKind::kCalendarEntry,
                            ArtifactKind::kReminder, ArtifactKind::kWalletPass}) {
        requests.push_back(prompts::generate_artifact(kind, Direction::kReceived, "outline", ej, pj));
    }
    for (int salt = 0; salt < 5; ++salt) {
        for (auto req : requests) {
            req.user_prompt += std::string(salt, ' ');
            const auto text = mock.respond(req);
            CAPTURE(req.agent_role);
            CHECK_NOTHROW(extract_json(text, *req.schema_hint));
        }
    }
}

TEST_CASE("generated artifacts respect cross-field invariants") {
    MockProvider mock;
    const auto pj = testing::sample_profile(2).to_json();
    for (int i = 0; i < 40; ++i) {
        auto ev = sample_event();
        ev.event += " " + std::to_string(i);
        for (const auto kind : {ArtifactKind::kMessageThread, ArtifactKind::kCalendarEntry, ArtifactKind::kWalletPass}) {
            const auto req = prompts::generate_artifact(kind, Direction::kSent, "o", ev.to_json(), pj);
            CHECK_NOTHROW(extract_json(mock.respond(req), schema_for(kind),
                                       [kind](const Json& j) { return validate_payload(kind, j); }));
        }
    }
}

TEST_CASE("calendar entries copy the event times") {
    MockProvider mock;
    const auto ev = sample_event();
    const auto req = prompts::generate_artifact(ArtifactKind::kCalendarEntry, Direction::kReceived, "o", ev.to_json(),
                                                testing::sample_profile(2).to_json());
    const auto j = extract_json(mock.respond(req), SchemaId::kCalendarEntry);
    CHECK(j["start_time"] == "2024-04-03T10:00:00");
    CHECK(j["end_time"] == "2024-04-03T11:00:00");
}

TEST_CASE("expansion policies") {
    const auto pj = testing::sample_profile(2).to_json();
    const auto req = prompts::expand_event(sample_event().to_json(), pj);
    MockProvider always(MockOptions{.expansion = ExpansionPolicy::kAlways, .always_children = 3});
    MockProvider never(MockOptions{.expansion = ExpansionPolicy::kNever});
    CHECK(extract_json(always.respond(req), SchemaId::kExpandedEventList).size() == 3);
    CHECK(extract_json(never.respond(req), SchemaId::kExpandedEventList).empty());
}

TEST_CASE("artifact routing by keywords") {
    CHECK(route_artifact_kind("Boarding pass for flight", 1).first == ArtifactKind::kWalletPass);
    CHECK(route_artifact_kind("Team meeting", 1).first == ArtifactKind::kCalendarEntry);
    CHECK(route_artifact_kind("Refill prescription", 1).first == ArtifactKind::kReminder);
    CHECK(route_pass_kind("Boarding pass") == PassKind::kBoardingPass);
    CHECK(route_pass_kind("Gym membership") == PassKind::kMembership);
    CHECK(route_pass_kind("Concert") == PassKind::kTicket);
}

TEST_CASE("embeddings: deterministic, unit length, vocabulary-sensitive") {
    MockProvider mock;
    const auto a = mock.embed("book flights to Paris for the summer");
    CHECK(a == mock.embed("book flights to Paris for the summer"));
    CHECK(std::abs(cosine(a, a) - 1.0) < 1e-12);
    double norm = 0;
    for (double v : a) norm += v * v;
    CHECK(std::abs(norm - 1.0) < 1e-9);
    const auto near = mock.embed("book cheap flights to Paris");
    const auto far = mock.embed("renew car insurance policy online");
    CHECK(cosine(a, near) > cosine(a, far));
    CHECK(mock.embed("") == mock.embed(""));
    CHECK(mock.embed("").size() == 128);
}

TEST_CASE("fixed token counts") {
    MockProvider mock(MockOptions{.fixed_input_tokens = 1500, .fixed_output_tokens = 1500});
    GenerationRequest r;
    r.system_prompt = "s";
    r.user_prompt = "u";
    const auto resp = mock.generate(r);
    CHECK(resp.input_tokens == 1500);
    CHECK(resp.output_tokens == 1500);
    CHECK(mock.estimate(r).output_tokens == 1500);
}

TEST_CASE("options from JSON") {
    const auto o = MockOptions::from_json(Json{{"seed", 5},
                                               {"expansion", "always"},
                                               {"critics", "approve"},
                                               {"revising_critics", {"realism_fluency"}},
                                               {"fixed_kind", "reminder"},
                                               {"fixed_direction", "sent"}});
    CHECK(o.seed == 5);
    CHECK(o.expansion == ExpansionPolicy::kAlways);
    CHECK(o.revising_critics.count(CriticAxis::kRealismFluency) == 1);
    REQUIRE(o.fixed_kind);
    CHECK(o.fixed_kind->first == ArtifactKind::kReminder);
    CHECK_THROWS_AS(MockOptions::from_json(Json{{"sed", 1}}), Error);
    CHECK_THROWS_AS(MockOptions::from_json(Json{{"expand_probability", 2.0}}), Error);
    CHECK_THROWS_AS(MockOptions::from_json(Json{{"fixed_input_tokens", 10}}), Error);
}
