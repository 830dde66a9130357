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

#include "tracegen/text.hpp"

using namespace tracegen;

TEST_CASE("word tokens lowercase and split on punctuation") {
    CHECK(text::word_tokens("Book Flights, to PARIS!") == std::vector<std::string>{"book", "flights", "to", "paris"});
    CHECK(text::word_tokens("") .empty());
    CHECK(text::word_tokens("  ...  ").empty());
    CHECK(text::word_tokens("snake_case v2") == std::vector<std::string>{"snake_case", "v2"});
}

TEST_CASE("word tokens handle non-ASCII letters") {
    CHECK(text::word_tokens("Café ÉCOLE") == std::vector<std::string>{"café", "école"});
    CHECK(text::word_tokens("Москва, Рим") == std::vector<std::string>{"москва", "рим"});
}

TEST_CASE("invalid UTF-8 separates words") {
    const std::string s = std::string("ab") + '\xff' + "cd";
    CHECK(text::word_tokens(s) == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("code points") {
    CHECK(text::codepoint_count("") == 0);
    CHECK(text::codepoint_count("abc") == 3);
    CHECK(text::codepoint_count("héllo") == 5);
    CHECK(text::codepoint_count("日本") == 2);
    CHECK(text::codepoint_count("\xf0\x9f\x98\x80") == 1);
}

TEST_CASE("trim, icase, join") {
    CHECK(text::trim("  a b \n") == "a b");
    CHECK(text::trim("   ").empty());
    CHECK(text::contains_icase("Boarding Pass", "boarding pass"));
    CHECK_FALSE(text::contains_icase("Board", "boarding"));
    CHECK(text::join({"a", "b", "c"}, ", ") == "a, b, c");
    CHECK(text::join({}, ",").empty());
}
