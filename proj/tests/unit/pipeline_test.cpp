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

#include <cstdlib>

#include "tracegen/error.hpp"
#include "tracegen/footprint.hpp"
#include "tracegen/pipeline.hpp"
#include "test_support.hpp"

using namespace tracegen;

namespace {

Json small_run(const std::filesystem::path& out) {
    return Json{{"provider", {{"kind", "mock"}, {"mock", {{"seed", 1}}}}},
                {"events_per_description", 4},
                {"personas", 2},
                {"seed", 5},
                {"forest_cap", 25},
                {"retrieval", {{"similar", 4}, {"uniform", 4}, {"generated", 4}}},
                {"out", out.string()}};
}

RunConfig small_config(const std::filesystem::path& dir) {
    write_file(dir / "descriptions.txt", "A nurse who runs marathons.\nA retired teacher who gardens.\nA student.\n");
    auto j = small_run(dir / "out");
    j["descriptions"] = "descriptions.txt";
    return RunConfig::from_json(j, dir);
}

std::string slurp_tree(const std::filesystem::path& root) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::string out;
    for (const auto& f : files) out += std::filesystem::relative(f, root).string() + "\n" + read_file(f);
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("run config parsing") {
    const auto c = RunConfig::from_json(small_run("o"), "/base");
    CHECK(c.personas == 2);
    CHECK(c.forest_cap == 25);
    CHECK(c.retrieval.generated == 4);
    CHECK(c.out == std::filesystem::path("/base/o"));
    CHECK(c.provider.kind == ProviderKind::kMock);
    CHECK(code_of([] { RunConfig::from_json(Json{{"personaz", 1}}); }) == ErrorCode::kConfigError);
    CHECK(code_of([] { RunConfig::from_json(Json{{"forest_cap", 500}}).validate(); }) == ErrorCode::kConfigError);
    CHECK(code_of([] { RunConfig::from_json(Json{{"forest_cap", 500}, {"allow_large_forest", true}}).validate(); }) ==
          ErrorCode::kOk);
    CHECK(code_of([] { RunConfig::from_json(Json{{"max_cycles", 6}}).validate(); }) == ErrorCode::kConfigError);
}

TEST_CASE("inline credentials are refused") {
    const Json j = {{"provider",
                     {{"kind", "http"}, {"endpoint", "https://api.example.com/v1"}, {"api_key", "sk-123"},
                      {"model", "m"}, {"embedding_model", "e"}, {"embedding_dim", 8}}}};
    CHECK(code_of([&] { RunConfig::from_json(j); }) == ErrorCode::kConfigError);
}

TEST_CASE("missing credential variable is a config error") {
    ProviderConfig p;
    p.kind = ProviderKind::kHttp;
    p.endpoint = "https://api.example.com/v1";
    p.api_key_env = "TRACEGEN_TEST_SURELY_UNSET";
    p.model = "m";
    p.embedding_model = "e";
    p.embedding_dim = 8;
    ::unsetenv("TRACEGEN_TEST_SURELY_UNSET");
    CHECK(code_of([&] { make_gateway(p, std::nullopt); }) == ErrorCode::kConfigError);
}

TEST_CASE("config hash ignores the output directory") {
    auto a = RunConfig::from_json(small_run("x"));
    auto b = RunConfig::from_json(small_run("y"));
    CHECK(a.config_hash() == b.config_hash());
    b.seed = 6;
    CHECK(a.config_hash() != b.config_hash());
    CHECK(a.config_hash().size() == 64);
}

TEST_CASE("default budget cap") {
    auto c = RunConfig::from_json(small_run("x"));
    CHECK(c.effective_budget_cap() == Money::from_usd(0.57 * 2 * 25));
    c.budget_cap_usd = 1.5;
    CHECK(c.effective_budget_cap() == Money::from_usd(1.5));
}

TEST_CASE("generate writes a complete, reproducible footprint") {
    const auto dir = testing::temp_dir("pipeline-gen");
    auto config = small_config(dir);
    const auto report = cmd_generate(config);
    CHECK(report.failures.empty());
    REQUIRE(report.persona_dirs.size() == 2);
    for (const auto& d : report.persona_dirs) {
        for (const char* f : {"profile.json", "forest.json", "trace.json", "footprint.jsonl", "calendar.ics",
                              "provenance.json", "warnings.txt"}) {
            CHECK(std::filesystem::exists(std::filesystem::path(d) / f));
        }
        const auto records = load_jsonl(std::filesystem::path(d) / "footprint.jsonl");
        CHECK_FALSE(records.empty());
        const auto forest = EventForest::from_json(Json::parse(read_file(std::filesystem::path(d) / "forest.json")));
        CHECK(forest.node_count() <= 25);
        for (const auto& r : records) CHECK(forest.contains(r.artifact.event_id));
    }
    CHECK(std::filesystem::exists(config.out / "run.json"));
    const auto first = slurp_tree(config.out);

    config.out = dir / "again";
    cmd_generate(config);
    CHECK(slurp_tree(config.out) == first);
}

TEST_CASE("a zero budget fails every persona") {
    const auto dir = testing::temp_dir("pipeline-budget");
    auto config = small_config(dir);
    const auto memory = dir / "memory.jsonl";
    cmd_build_memory(config, config.descriptions, memory);
    config.memory = memory;
    config.budget_cap_usd = 0.0;
    const auto report = cmd_generate(config);
    CHECK(report.persona_dirs.empty());
    REQUIRE(report.failures.size() == 2);
    for (const auto& f : report.failures) CHECK(f.code == ErrorCode::kBudgetExceeded);
}

TEST_CASE("build-memory writes the memory and its index") {
    const auto dir = testing::temp_dir("pipeline-mem");
    const auto config = small_config(dir);
    const auto outcome = cmd_build_memory(config, config.descriptions, dir / "m.jsonl");
    CHECK(outcome.report.descriptions == 3);
    CHECK(outcome.events > 0);
    CHECK(EventMemory::load(dir / "m.jsonl").size() == outcome.events);
}

TEST_CASE("evaluate keeps corpus order") {
    const auto dir = testing::temp_dir("pipeline-eval");
    write_file(dir / "b.txt", "the cat sat on the mat\na dog ran in the park\nsee http://x.example today\n");
    write_file(dir / "a.txt", "meeting at noon\nyour bill is ready\nticket confirmed for friday\nhello there\n");
    write_file(dir / "one.txt", "lonely\n");
    RunConfig config;
    const auto result = cmd_evaluate(config, {dir / "b.txt", dir / "a.txt"}, dir / "report");
    REQUIRE(result.report["corpora"].size() == 2);
    CHECK(result.report["corpora"][0]["name"] == (dir / "b.txt").string());
    CHECK(result.report["corpora"][1]["name"] == (dir / "a.txt").string());
    CHECK(std::filesystem::exists(dir / "report" / "report.json"));
    CHECK(std::filesystem::exists(dir / "report" / "report.txt"));
    CHECK(result.table.find("Pairwise Corr.") != std::string::npos);
    CHECK(code_of([&] { cmd_evaluate(config, {dir / "one.txt"}, {}); }) == ErrorCode::kConfigError);
    CHECK(code_of([&] { cmd_evaluate(config, {dir / "missing.txt"}, {}); }) == ErrorCode::kConfigError);
}

TEST_CASE("evaluate is reproducible and can add the template baseline") {
    const auto dir = testing::temp_dir("pipeline-eval-ablated");
    write_file(dir / "c.txt", "meeting at noon\nyour bill is ready\nticket confirmed for friday\nhello there\n");
    RunConfig config;
    config.seed = 4;
    config.ablated_baseline = 30;
    const auto a = cmd_evaluate(config, {dir / "c.txt"}, dir / "r1");
    const auto b = cmd_evaluate(config, {dir / "c.txt"}, dir / "r2");
    CHECK(read_file(dir / "r1" / "report.json") == read_file(dir / "r2" / "report.json"));
    REQUIRE(a.report["corpora"].size() == 2);
    CHECK(a.report["corpora"][1]["name"] == "ablated-baseline");
    CHECK(a.report["corpora"][1]["metrics"]["n_docs"] == 30);
    CHECK(cmd_evaluate(config, {}, {}).report["corpora"].size() == 1);
    config.ablated_baseline = 0;
    CHECK(code_of([&] { cmd_evaluate(config, {}, {}); }) == ErrorCode::kConfigError);
}
