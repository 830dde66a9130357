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
#include <cmath>
#include <set>

#include "tracegen/error.hpp"
#include "tracegen/minhash.hpp"
#include "memory_fixtures.hpp"

using namespace tracegen;

TEST_CASE("signatures are deterministic and seed-dependent") {
    const auto a = minhash_signature("book flights to paris", 256, 1);
    CHECK(a == minhash_signature("Book flights, to Paris!", 256, 1));
    CHECK(a.k() == 256);
    CHECK(a != minhash_signature("book flights to paris", 256, 2));
    CHECK(estimate_jaccard(a, a) == 1.0);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(minhash_signature("...", 256, 0), Error);
    try {
        minhash_signature(std::vector<std::string>{}, 256, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kEmptyTokenSet);
    }
    CHECK_THROWS_AS(minhash_signature("x", 8, 0), Error);
    try {
        estimate_jaccard(minhash_signature("x", 64, 0), minhash_signature("x", 128, 0));
        FAIL("expected SignatureMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kSignatureMismatch);
    }
    CHECK_THROWS_AS(estimate_jaccard(minhash_signature("x", 64, 0), minhash_signature("x", 64, 1)), Error);
    CHECK_THROWS_AS((MinHashParams{.k = 256, .bands = 30, .rows = 8}.validate()), Error);
}

TEST_CASE("estimates track exact Jaccard") {
    Rng rng(5);
    double total = 0;
    const int pairs = 100;
    for (int p = 0; p < pairs; ++p) {
        std::set<std::string> a, b;
        const auto shared = rng.below(60);
        for (std::uint64_t i = 0; i < shared; ++i) {
            a.insert("s" + std::to_string(p) + "_" + std::to_string(i));
            b.insert("s" + std::to_string(p) + "_" + std::to_string(i));
        }
        const auto only_a = rng.below(40) + 1;
        const auto only_b = rng.below(40) + 1;
        for (std::uint64_t i = 0; i < only_a; ++i) a.insert("a" + std::to_string(i));
        for (std::uint64_t i = 0; i < only_b; ++i) b.insert("b" + std::to_string(i));
        const auto est = estimate_jaccard(minhash_signature(std::vector<std::string>(a.begin(), a.end()), 256, 9),
                                          minhash_signature(std::vector<std::string>(b.begin(), b.end()), 256, 9));
        const auto err = std::abs(est - testing::exact_jaccard(a, b));
        CHECK(err <= 0.25);
        total += err;
    }
    CHECK(total / pairs <= 3.0 / 16.0);
}

TEST_CASE("character shingles") {
    const auto s = shingles("abcd", 3);
    CHECK(s == std::vector<std::string>{"abc", "bcd"});
    CHECK(shingles("Hello hello world") == std::vector<std::string>{"hello", "world"});
}

TEST_CASE("LSH finds near duplicates and skips unrelated texts") {
    LshIndex index(32, 8);
    const auto base = minhash_signature("alpha beta gamma delta epsilon zeta eta theta iota kappa", 256, 0);
    index.insert(0, base);
    index.insert(1, minhash_signature("one two three four five six seven eight nine ten", 256, 0));
    const auto near = minhash_signature("alpha beta gamma delta epsilon zeta eta theta iota lambda", 256, 0);
    const auto c = index.candidates(near);
    CHECK(std::find(c.begin(), c.end(), 0u) != c.end());
    CHECK(std::find(c.begin(), c.end(), 1u) == c.end());
    CHECK(index.size() == 2);
}

TEST_CASE("dedup removes exactly the planted duplicates") {
    const auto f = testing::dedup_fixture();
    const auto kept = dedup(f.events, 0.8);
    CHECK(kept.size() == f.events.size() - f.planted.size());
    for (std::size_t i = 0; i < f.events.size(); ++i) {
        const bool present = std::find(kept.begin(), kept.end(), f.events[i]) != kept.end();
        CHECK(present == (f.planted.count(i) == 0));
    }
}

TEST_CASE("dedup keeps the first of identical texts and is idempotent") {
    const auto events = testing::synthetic_events(80, 3);
    auto doubled = events;
    doubled.insert(doubled.end(), events.begin(), events.end());
    const auto once = dedup(doubled);
    CHECK(once.size() <= events.size());
    CHECK(dedup(once) == once);
    CHECK_THROWS_AS(dedup(events, 1.5), Error);
}
