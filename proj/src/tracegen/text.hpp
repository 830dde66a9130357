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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tracegen::text {

// Splits UTF-8 text into lowercased word tokens.
//
// A word is a maximal run of letters, digits, marks, or underscore. Code
// points outside ASCII count as word characters unless they fall into the
// Unicode punctuation, symbol, or separator blocks listed in text.cpp.
// Invalid UTF-8 bytes act as separators. Lowercasing covers ASCII, Latin-1,
// Latin Extended-A, Greek, and Cyrillic; other scripts pass through.
std::vector<std::string> word_tokens(std::string_view utf8);

// Number of Unicode code points; invalid bytes count one each.
std::size_t codepoint_count(std::string_view utf8);

std::string_view trim(std::string_view s);

bool contains_icase(std::string_view haystack, std::string_view needle);

std::string to_lower_ascii(std::string_view s);

// Joins with a separator.
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace tracegen::text
