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

#include <atomic>

#include "tracegen/artifact_engine.hpp"
#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"
#include "tracegen/schema.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

ExpandedEvent dentist_event() {
    ExpandedEvent e;
    e.event = "Dentist appointment";
    e.detailed_description = "Routine cleaning at the downtown clinic.";
    e.location = "Downtown Dental";
    e.start_time = *LocalDateTime::parse("2024-04-02T09:00:00");
    e.end_time = *LocalDateTime::parse("2024-04-02T10:00:00");
    return e;
}

bool is_critic(const GenerationRequest& r) { return testing::starts_with(r.agent_role, prompts::role::kCritic); }

// Critics say "revise" (realism axis only) for the first `revising_rounds` rounds.
testing::ScriptedProvider::Script revise_for(std::shared_ptr<std::atomic<int>> critic_calls, int revising_rounds) {
    return [critic_calls, revising_rounds](const GenerationRequest& r) -> std::optional<std::string> {
        if (!is_critic(r)) return std::nullopt;
        const int n = (*critic_calls)++;
        const bool realism = n % 3 == 2;
        if (realism && n / 3 < revising_rounds) return R"({"verdict": "revise", "feedback": "too stiff"})";
        return R"({"verdict": "approve", "feedback": ""})";
    };
}

std::size_t refine_calls(int revising_rounds, std::size_t max_cycles, RefinedArtifact* out = nullptr) {
    auto gw = testing::scripted_gateway(revise_for(std::make_shared<std::atomic<int>>(0), revising_rounds));
    const auto profile = testing::sample_profile(*gw, 1);
    const auto before = gw->ledger().call_count();
    auto r = refine(*gw, dentist_event(), 0, profile, ArtifactKind::kEmail, Direction::kReceived,
                    RefineOptions{max_cycles});
    if (out) *out = r;
    return gw->ledger().call_count() - before;
}

}  // namespace

TEST_CASE("call count follows the refine formula") {
    for (std::size_t max_cycles = 1; max_cycles <= kMaxCyclesCeiling; ++max_cycles) {
        for (int rounds = 0; rounds <= static_cast<int>(max_cycles); ++rounds) {
            CAPTURE(max_cycles);
            CAPTURE(rounds);
            RefinedArtifact r;
            const auto calls = refine_calls(rounds, max_cycles, &r);
            if (rounds < static_cast<int>(max_cycles)) {
                const std::size_t c = rounds + 1;
                CHECK(r.approved);
                CHECK(r.cycles_used == c);
                CHECK(calls == 2 + 3 * c + (c - 1));
            } else {
                CHECK_FALSE(r.approved);
                CHECK(r.cycles_used == max_cycles);
                CHECK(calls == 2 + 4 * max_cycles);
            }
        }
    }
}

TEST_CASE("choosing the kind costs one call") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 1);
    const auto before = gw->ledger().call_count();
    const auto r = refine(*gw, dentist_event(), 0, profile);
    CHECK(r.approved);
    CHECK(gw->ledger().call_count() - before == 1 + 2 + 3);
    CHECK(validate(schema_for(r.artifact.kind()), payload_to_json(r.artifact.payload)).empty());
}

TEST_CASE("refined artifacts match their kind's schema") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 2);
    for (const auto kind : kAllArtifactKinds) {
        const auto r = refine(*gw, dentist_event(), 7, profile, kind, Direction::kSent);
        CHECK(r.artifact.kind() == kind);
        CHECK(r.artifact.event_id == 7);
        CHECK(r.artifact.direction == Direction::kSent);
        CHECK(validate(schema_for(kind), payload_to_json(r.artifact.payload)).empty());
    }
}

TEST_CASE("joint feedback lists every revising axis") {
    const std::vector<Critique> cs = {{CriticAxis::kEventConsistency, Verdict::kRevise, "wrong date"},
                                      {CriticAxis::kPersonaConsistency, Verdict::kApprove, ""},
                                      {CriticAxis::kRealismFluency, Verdict::kRevise, "stiff"}};
    const auto f = joint_feedback(cs);
    CHECK(f.find("wrong date") != std::string::npos);
    CHECK(f.find("stiff") != std::string::npos);
    CHECK(f.find('\n') != std::string::npos);
}

TEST_CASE("unusable kind choice falls back to a received email") {
    auto gw = testing::scripted_gateway([](const GenerationRequest& r) -> std::optional<std::string> {
        if (r.agent_role == prompts::role::kChooseArtifact) return R"({"kind": "fax"})";
        return std::nullopt;
    });
    std::vector<std::string> warnings;
    const auto choice = choose_artifact_kind(*gw, dentist_event(), testing::sample_profile(*gw, 1), &warnings);
    CHECK(choice.first == ArtifactKind::kEmail);
    CHECK(choice.second == Direction::kReceived);
    CHECK(warnings.size() == 1);
}

TEST_CASE("empty outline is retried once then fails") {
    int outlines = 0;
    auto gw = testing::scripted_gateway([&](const GenerationRequest& r) -> std::optional<std::string> {
        if (r.agent_role == prompts::role::kOutline) {
            ++outlines;
            return "   ";
        }
        return std::nullopt;
    });
    const auto profile = testing::sample_profile(*gw, 1);
    try {
        generate_outline(*gw, ArtifactKind::kReminder, Direction::kSent, dentist_event(), profile);
        FAIL("expected OutlineFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kOutlineFailed);
    }
    CHECK(outlines == 2);
}

TEST_CASE("invalid generation after repair") {
    auto gw = testing::scripted_gateway([](const GenerationRequest& r) -> std::optional<std::string> {
        if (testing::starts_with(r.agent_role, prompts::role::kGenerate)) return R"({"subject": "hi"})";
        return std::nullopt;
    });
    const auto profile = testing::sample_profile(*gw, 1);
    try {
        generate_artifact(*gw, "outline", dentist_event(), 0, profile, ArtifactKind::kEmail, Direction::kReceived);
        FAIL("expected GenerationFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kGenerationFailed);
    }
}

TEST_CASE("a broken critic approves with a warning") {
    auto gw = testing::scripted_gateway([](const GenerationRequest& r) -> std::optional<std::string> {
        if (testing::starts_with(r.agent_role, "critic:realism_fluency")) return "nope";
        return std::nullopt;
    });
    const auto profile = testing::sample_profile(*gw, 1);
    std::vector<std::string> warnings;
    const auto r = refine(*gw, dentist_event(), 0, profile, ArtifactKind::kEmail, Direction::kReceived, {}, &warnings);
    CHECK(r.approved);
    CHECK(r.last_critiques.size() == 3);
    CHECK(r.last_critiques[2].feedback == "critic unavailable");
    CHECK_FALSE(warnings.empty());
}

TEST_CASE("max_cycles bounds") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 1);
    CHECK_THROWS_AS(refine(*gw, dentist_event(), 0, profile, RefineOptions{0}), Error);
    CHECK_THROWS_AS(refine(*gw, dentist_event(), 0, profile, RefineOptions{kMaxCyclesCeiling + 1}), Error);
}

TEST_CASE("a scope budget stops refinement") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 1);
    BudgetScope scope(Money::from_pico(1));
    try {
        refine(*gw, dentist_event(), 0, profile, {}, nullptr, &scope);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
    }
}
