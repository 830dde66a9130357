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

#include "tracegen/error.hpp"
#include "tracegen/event_forest.hpp"
#include "tracegen/prompts.hpp"
#include "memory_fixtures.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

SeedBundle small_bundle(std::size_t n) {
    SeedBundle b;
    b.similar = testing::synthetic_events(n, 11);
    return b;
}

}  // namespace

TEST_CASE("always-expand stops exactly at the cap") {
    auto gw = testing::mock_gateway({.expansion = ExpansionPolicy::kAlways, .always_children = 4});
    const auto profile = testing::sample_profile(*gw, 1);
    const auto build = build_forest(*gw, small_bundle(10), profile, {.cap = 300});
    CHECK(build.forest.node_count() == 300);
    CHECK(build.forest.roots.size() == 10);
    CHECK(build.forest.check().empty());
}

TEST_CASE("never-expand keeps one root per seed") {
    auto gw = testing::mock_gateway({.expansion = ExpansionPolicy::kNever});
    const auto profile = testing::sample_profile(*gw, 1);
    const auto build = build_forest(*gw, small_bundle(12), profile);
    CHECK(build.forest.node_count() == 12);
    CHECK(build.forest.roots.size() == 12);
    CHECK(build.trace.size() == 12);
    for (const auto& step : build.trace) CHECK(step.children == 0);
}

TEST_CASE("expansion is breadth-first") {
    auto gw = testing::mock_gateway({.expansion = ExpansionPolicy::kMixed, .expand_probability = 0.6});
    const auto profile = testing::sample_profile(*gw, 3);
    const auto build = build_forest(*gw, small_bundle(8), profile, {.cap = 120});
    CHECK(build.forest.node_count() <= 120);
    CHECK(build.forest.check().empty());
    for (std::size_t i = 1; i < build.trace.size(); ++i) CHECK(build.trace[i - 1].depth <= build.trace[i].depth);
    for (const auto& n : build.forest.nodes) {
        if (n.parent) CHECK(n.depth == build.forest.nodes[*n.parent].depth + 1);
    }
}

TEST_CASE("participants stay inside the social graph") {
    auto gw = testing::mock_gateway({.expansion = ExpansionPolicy::kAlways, .always_children = 2});
    const auto profile = testing::sample_profile(*gw, 6);
    const auto build = build_forest(*gw, small_bundle(5), profile, {.cap = 40});
    for (const auto& n : build.forest.nodes) {
        for (const auto& p : n.payload.other_participants) CHECK(profile.knows(p));
    }
}

TEST_CASE("filter_participants drops strangers with a warning") {
    const auto profile = testing::sample_profile(2);
    ExpandedEvent e;
    e.other_participants = {"Total Stranger"};
    const auto graph = profile.social_graph();
    if (!graph.empty()) e.other_participants.push_back(graph.front());
    std::vector<std::string> warnings;
    filter_participants(e, profile, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(e.other_participants.size() == (graph.empty() ? 0u : 1u));
}

TEST_CASE("JSON round trip and structural check") {
    auto gw = testing::mock_gateway({.expansion = ExpansionPolicy::kAlways, .always_children = 2});
    const auto profile = testing::sample_profile(*gw, 1);
    auto forest = build_forest(*gw, small_bundle(3), profile, {.cap = 20}).forest;
    CHECK(EventForest::from_json(forest.to_json()) == forest);
    forest.nodes.back().depth += 5;
    CHECK_FALSE(forest.check().empty());
}

TEST_CASE("invalid inputs") {
    auto gw = testing::mock_gateway();
    const auto profile = testing::sample_profile(*gw, 1);
    CHECK_THROWS_AS(build_forest(*gw, SeedBundle{}, profile), Error);
    CHECK_THROWS_AS(build_forest(*gw, small_bundle(1), profile, {.cap = 0}), Error);
}

TEST_CASE("a broken expansion counts as atomic") {
    auto gw = testing::scripted_gateway(
        [](const GenerationRequest& r) -> std::optional<std::string> {
            if (testing::starts_with(r.agent_role, prompts::role::kExpand)) return "nonsense";
            return std::nullopt;
        },
        {.expansion = ExpansionPolicy::kAlways});
    const auto profile = testing::sample_profile(*gw, 1);
    const auto build = build_forest(*gw, small_bundle(2), profile);
    CHECK(build.forest.node_count() == 2);
    CHECK_FALSE(build.warnings.empty());
}

TEST_CASE("forest building is deterministic") {
    auto a = testing::mock_gateway();
    auto b = testing::mock_gateway();
    const auto profile = testing::sample_profile(1);
    CHECK(build_forest(*a, small_bundle(6), profile).forest == build_forest(*b, small_bundle(6), profile).forest);
}
