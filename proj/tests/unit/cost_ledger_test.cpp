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

#include "tracegen/cost_ledger.hpp"
#include "tracegen/error.hpp"
#include "tracegen/random.hpp"

using namespace tracegen;

TEST_CASE("one call at 2.5/10 USD per million tokens") {
    const auto prices = PriceTable::from_usd_per_million(2.5, 10.0);
    const auto cost = prices.cost(1500, 1500);
    // 1500 * 2.5e-6 + 1500 * 1e-5 = 0.01875 USD exactly; 0.019 after rounding
    // to the nearest tenth of a cent.
    CHECK(cost.pico() == 18'750'000'000);
    CHECK(std::llround(cost.usd() * 1000) == 19);
}

TEST_CASE("ledger total equals the sum of its records exactly") {
    CostLedger ledger;
    Rng rng(11);
    const auto prices = PriceTable::from_usd_per_million(0.3, 1.7);
    std::int64_t expected = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto in = rng.below(20000);
        const auto out = rng.below(5000);
        expected += static_cast<std::int64_t>(in) * 300'000 + static_cast<std::int64_t>(out) * 1'700'000;
        ledger.record(CostRecord{"r", in, out, prices, prices.cost(in, out)});
    }
    CHECK(ledger.total().pico() == expected);
    Money sum;
    for (const auto& r : ledger.records()) sum += r.cost;
    CHECK(sum == ledger.total());
    CHECK(ledger.call_count() == 1000);
}

TEST_CASE("reservations count against the cap until released") {
    CostLedger ledger(Money::from_usd(1.0));
    const auto a = ledger.reserve(Money::from_usd(0.6), nullptr);
    CHECK_THROWS_AS(ledger.reserve(Money::from_usd(0.5), nullptr), Error);
    ledger.release(a);
    const auto b = ledger.reserve(Money::from_usd(0.5), nullptr);
    ledger.commit(b, CostRecord{"x", 0, 0, {}, Money::from_usd(0.2)});
    CHECK(ledger.total() == Money::from_usd(0.2));
    try {
        ledger.reserve(Money::from_usd(0.81), nullptr);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
        CHECK(e.details() == std::vector<std::string>{"global"});
    }
}

TEST_CASE("scope caps apply independently of the global cap") {
    CostLedger ledger;
    BudgetScope scope(Money::from_usd(0.57));
    for (int i = 0; i < 30; ++i) {
        const auto r = ledger.reserve(Money::from_usd(0.019), &scope);
        ledger.commit(r, CostRecord{"x", 1500, 1500, {}, Money::from_usd(0.019)});
    }
    CHECK(scope.spent() == Money::from_usd(0.57));
    CHECK(scope.calls() == 30);
    try {
        ledger.reserve(Money::from_usd(0.019), &scope);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
        CHECK(e.details() == std::vector<std::string>{"scope"});
    }
    CHECK(ledger.reserve(Money::from_usd(0.019), nullptr).amount == Money::from_usd(0.019));
}

TEST_CASE("concurrent commits are all recorded") {
    CostLedger ledger;
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 500; ++i) {
                const auto r = ledger.reserve(Money::from_pico(7), nullptr);
                ledger.commit(r, CostRecord{"t", 1, 1, {}, Money::from_pico(5)});
            }
        });
    }
    for (auto& t : threads) t.join();
    CHECK(ledger.call_count() == 4000);
    CHECK(ledger.total().pico() == 20000);
}

TEST_CASE("prices reject negatives") {
    CHECK_THROWS_AS(PriceTable::from_usd_per_million(-1, 1), Error);
}
