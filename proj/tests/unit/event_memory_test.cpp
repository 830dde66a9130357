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

#include <algorithm>
#include <fstream>
#include <set>

#include "tracegen/error.hpp"
#include "tracegen/event_memory.hpp"
#include "tracegen/prompts.hpp"
#include "memory_fixtures.hpp"
#include "test_support.hpp"

using namespace tracegen;

TEST_CASE("save and load round trip") {
    auto gw = testing::mock_gateway();
    const auto memory = testing::synthetic_memory(*gw, 25);
    const auto dir = testing::temp_dir("memory-rt");
    memory.save(dir / "memory.jsonl");
    CHECK(std::filesystem::exists(EventMemory::index_path(dir / "memory.jsonl")));
    const auto loaded = EventMemory::load(dir / "memory.jsonl");
    CHECK(loaded.events() == memory.events());
    CHECK(loaded.signatures() == memory.signatures());
    CHECK(loaded.embeddings() == memory.embeddings());
    CHECK(loaded.lsh().size() == 25);
}

TEST_CASE("load rejects a different index version") {
    auto gw = testing::mock_gateway();
    const auto dir = testing::temp_dir("memory-ver");
    testing::synthetic_memory(*gw, 3).save(dir / "m.jsonl");
    const auto index = EventMemory::index_path(dir / "m.jsonl");
    auto j = Json::parse(read_file(index));
    j["format_version"] = kMemoryFormatVersion + 1;
    write_file(index, j.dump());
    try {
        EventMemory::load(dir / "m.jsonl");
        FAIL("expected VersionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kVersionMismatch);
    }
    CHECK_THROWS_AS(EventMemory::load(dir / "missing.jsonl"), Error);
}

TEST_CASE("constructor checks") {
    CHECK_THROWS_AS(EventMemory({SeedEvent{"a", "b"}}, {}), Error);
    try {
        EventMemory({SeedEvent{"...", "!!"}}, {{1.0, 0.0}});
        FAIL("expected EmptyTokenSet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kEmptyTokenSet);
    }
}

TEST_CASE("build_memory pools, deduplicates and counts") {
    auto gw = testing::mock_gateway();
    const std::vector<std::string> descriptions = {"A nurse who runs marathons.", "A retired teacher who gardens.",
                                                   "A nurse who runs marathons."};
    const auto result = build_memory(*gw, descriptions, 10);
    const auto& r = result.report;
    CHECK(r.descriptions == 3);
    CHECK(r.failed_descriptions == 0);
    CHECK(r.parsed_events == 30);
    // The repeated description yields the same events, all removed.
    CHECK(r.duplicates_removed >= 10);
    CHECK(result.memory.size() == r.parsed_events - r.skipped_events - r.duplicates_removed);
    CHECK(dedup(result.memory.events()) == result.memory.events());
    CHECK(gw->ledger().calls_by_role().at(std::string(prompts::role::kSeedEvents)) == 3);
}

TEST_CASE("a failing description is skipped") {
    auto gw = testing::scripted_gateway([](const GenerationRequest& r) -> std::optional<std::string> {
        if (r.user_prompt.find("astronaut") != std::string::npos) return "no json here";
        return std::nullopt;
    });
    const auto result = build_memory(*gw, {"An astronaut.", "A baker."}, 5);
    CHECK(result.report.failed_descriptions == 1);
    CHECK(result.memory.size() > 0);
    CHECK_FALSE(result.report.warnings.empty());
}

TEST_CASE("top_k_similar orders by cosine with ties to the lower index") {
    const EventMemory memory({SeedEvent{"a x", "one"}, SeedEvent{"b x", "two"}, SeedEvent{"c x", "three"},
                              SeedEvent{"d x", "four"}},
                             {{1, 0}, {0, 1}, {1, 0}, {0.8, 0.6}});
    CHECK(top_k_similar(memory, {1, 0}, 3) == std::vector<std::size_t>{0, 2, 3});
    CHECK(top_k_similar(memory, {0, 1}, 10).size() == 4);
}

TEST_CASE("retrieve_seeds returns three disjoint legs") {
    auto gw = testing::mock_gateway();
    const auto memory = testing::synthetic_memory(*gw, 500);
    const auto profile = testing::sample_profile(*gw, 4);
    const auto bundle = retrieve_seeds(*gw, profile, memory, 77);
    CHECK(bundle.similar.size() == 30);
    CHECK(bundle.uniform.size() == 30);
    CHECK(bundle.generated.size() == 40);
    CHECK(bundle.size() == 100);
    std::set<std::string> texts;
    for (const auto& e : bundle.all()) texts.insert(e.text());
    CHECK(texts.size() == 100);

    // Similar entries are exactly the top 30 by embedding.
    const auto query = gw->embed(query_digest(profile)).values;
    const auto top = top_k_similar(memory, query, 30);
    for (std::size_t i = 0; i < 30; ++i) CHECK(bundle.similar[i] == memory.events()[top[i]]);
    for (const auto& e : bundle.uniform) {
        CHECK(std::find(memory.events().begin(), memory.events().end(), e) != memory.events().end());
    }
}

TEST_CASE("retrieval is deterministic in the seed") {
    auto gw = testing::mock_gateway();
    const auto memory = testing::synthetic_memory(*gw, 200);
    const auto profile = testing::sample_profile(*gw, 2);
    const auto a = retrieve_seeds(*gw, profile, memory, 5);
    const auto b = retrieve_seeds(*gw, profile, memory, 5);
    CHECK(a.all() == b.all());
    const auto c = retrieve_seeds(*gw, profile, memory, 6);
    CHECK(a.uniform != c.uniform);
}

TEST_CASE("small memories shrink the uniform leg") {
    auto gw = testing::mock_gateway();
    const auto memory = testing::synthetic_memory(*gw, 40);
    const auto bundle = retrieve_seeds(*gw, testing::sample_profile(*gw, 1), memory, 1);
    CHECK(bundle.similar.size() == 30);
    CHECK(bundle.uniform.size() == 10);
    CHECK_THROWS_AS(retrieve_seeds(*gw, testing::sample_profile(*gw, 1), EventMemory{}, 1), Error);
}
