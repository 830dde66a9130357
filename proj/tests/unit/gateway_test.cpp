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

#include <thread>

#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"
#include "test_support.hpp"

using namespace tracegen;
using testing::quiet_options;

namespace {

GenerationRequest ping() {
    GenerationRequest r;
    r.system_prompt = "You are a test.";
    r.user_prompt = "ping";
    return r;
}

// Fails transiently `failures` times, then answers.
class FlakyProvider : public MockProvider {
public:
    explicit FlakyProvider(int failures) : failures_(failures) {}
    GenerationResponse generate(const GenerationRequest& request) override {
        ++calls;
        if (failures_-- > 0) throw TransientProviderError("503");
        return MockProvider::generate(request);
    }
    int calls = 0;

private:
    int failures_;
};

// Records the peak number of concurrent generate() calls.
class SlowProvider : public MockProvider {
public:
    GenerationResponse generate(const GenerationRequest& request) override {
        const int now = ++in_flight;
        int seen = peak.load();
        while (now > seen && !peak.compare_exchange_weak(seen, now)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
        --in_flight;
        return MockProvider::generate(request);
    }
    std::atomic<int> in_flight{0};
    std::atomic<int> peak{0};
};

}  // namespace

TEST_CASE("mock completions are deterministic per seed") {
    auto a = testing::mock_gateway(MockOptions{.seed = 7});
    auto b = testing::mock_gateway(MockOptions{.seed = 7});
    CHECK(a->complete(ping()).text == b->complete(ping()).text);
    CHECK(a->complete(ping()).text == a->complete(ping()).text);
}

TEST_CASE("invalid requests are rejected before any provider call") {
    auto gw = testing::mock_gateway();
    auto r = ping();
    r.user_prompt = "";
    CHECK_THROWS_WITH_AS(gw->complete(r), doctest::Contains("user_prompt"), Error);
    r = ping();
    r.temperature = 3;
    CHECK_THROWS_AS(gw->complete(r), Error);
    r = ping();
    r.max_output_tokens = 0;
    CHECK_THROWS_AS(gw->complete(r), Error);
    CHECK(gw->ledger().call_count() == 0);
}

TEST_CASE("ledger increment for 1500 + 1500 tokens") {
    auto gw = testing::mock_gateway(MockOptions{.fixed_input_tokens = 1500, .fixed_output_tokens = 1500});
    gw->complete(ping());
    CHECK(gw->ledger().total().pico() == 18'750'000'000);
    const auto rec = gw->ledger().records().at(0);
    CHECK(rec.input_tokens == 1500);
    CHECK(rec.output_tokens == 1500);
}

TEST_CASE("transient failures are retried with exponential backoff") {
    auto provider = std::make_shared<FlakyProvider>(3);
    std::vector<long long> waits;
    auto options = quiet_options();
    options.sleep = [&](std::chrono::milliseconds d) { waits.push_back(d.count()); };
    Gateway gw(provider, options);
    CHECK_FALSE(gw.complete(ping()).text.empty());
    CHECK(provider->calls == 4);
    CHECK(waits == std::vector<long long>{500, 1000, 2000});
    CHECK(gw.ledger().call_count() == 1);
}

TEST_CASE("retries are bounded") {
    auto provider = std::make_shared<FlakyProvider>(100);
    Gateway gw(provider, quiet_options());
    try {
        gw.complete(ping());
        FAIL("expected ProviderUnavailable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kProviderUnavailable);
    }
    CHECK(provider->calls == 4);
    CHECK(gw.ledger().call_count() == 0);
}

TEST_CASE("backoff delay is capped") {
    RetryPolicy p;
    CHECK(p.delay_for(1).count() == 500);
    CHECK(p.delay_for(5).count() == 8000);
    CHECK(p.delay_for(30).count() == 8000);
}

TEST_CASE("budget cap stops calls") {
    auto options = quiet_options();
    options.budget_cap = Money::from_usd(0);
    auto gw = testing::mock_gateway({}, options);
    try {
        gw->complete(ping());
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
    }
}

TEST_CASE("in-flight calls never exceed the concurrency cap") {
    for (std::size_t cap : {1u, 3u}) {
        auto provider = std::make_shared<SlowProvider>();
        Gateway gw(provider, quiet_options(cap));
        std::vector<std::thread> threads;
        for (int t = 0; t < 8; ++t) {
            threads.emplace_back([&] {
                for (int i = 0; i < 5; ++i) gw.complete(ping());
            });
        }
        for (auto& t : threads) t.join();
        CHECK(provider->peak.load() <= static_cast<int>(cap));
        CHECK(gw.peak_in_flight() <= cap);
        CHECK(gw.ledger().call_count() == 40);
    }
}

TEST_CASE("complete_json repairs once, then fails") {
    int calls = 0;
    auto gw = testing::scripted_gateway([&](const GenerationRequest& r) -> std::optional<std::string> {
        ++calls;
        if (r.agent_role.find(":repair") != std::string::npos) return R"({"title": "ok", "due_time": "2024-01-01T10:00:00"})";
        return "no json here";
    });
    auto req = ping();
    const auto j = gw->complete_json(req, SchemaId::kReminder);
    CHECK(j["title"] == "ok");
    CHECK(calls == 2);
    const auto roles = gw->ledger().calls_by_role();
    CHECK(roles.at("unspecified") == 1);
    CHECK(roles.at("unspecified:repair") == 1);

    auto bad = testing::scripted_gateway([](const GenerationRequest&) -> std::optional<std::string> {
        return R"({"title": "missing due"})";
    });
    try {
        bad->complete_json(ping(), SchemaId::kReminder);
        FAIL("expected SchemaViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kSchemaViolation);
    }
    CHECK(bad->ledger().call_count() == 2);
}

TEST_CASE("repair prompt lists the problems") {
    std::string repaired;
    auto gw = testing::scripted_gateway([&](const GenerationRequest& r) -> std::optional<std::string> {
        if (r.agent_role.find(":repair") != std::string::npos) {
            repaired = r.user_prompt;
            return R"({"title": "ok", "due_time": "2024-01-01T10:00:00"})";
        }
        return R"({"title": "ok"})";
    });
    gw->complete_json(ping(), SchemaId::kReminder);
    CHECK(repaired.find("due_time") != std::string::npos);
    CHECK(testing::starts_with(repaired, "ping"));
}

TEST_CASE("embeddings") {
    auto gw = testing::mock_gateway();
    const auto a = gw->embed("book flights to Paris");
    CHECK(a.values == gw->embed("book flights to Paris").values);
    CHECK(a.dim() == 128);
    CHECK(a.values != gw->embed("renew the car insurance").values);
    const auto empty = gw->embed("");
    CHECK(empty.dim() == 128);
    double norm = 0;
    for (double v : empty.values) norm += v * v;
    CHECK(norm > 0);
    CHECK(empty.values == gw->embed("").values);
}
