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

#include "tracegen/json_extract.hpp"

#include <optional>

#include "tracegen/error.hpp"

namespace tracegen {
namespace {

// End (exclusive) of the bracketed span opening at `start`, honoring string
// literals and escapes. nullopt when the brackets never balance.
std::optional<std::size_t> balanced_end(std::string_view s, std::size_t start) {
    std::vector<char> stack;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        switch (c) {
            case '"': in_string = true; break;
            case '{': stack.push_back('}'); break;
            case '[': stack.push_back(']'); break;
            case '}':
            case ']':
                if (stack.empty() || stack.back() != c) return std::nullopt;
                stack.pop_back();
                if (stack.empty()) return i + 1;
                break;
            default: break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Json> json_candidates(std::string_view raw, std::size_t max_candidates) {
    std::vector<Json> out;
    for (std::size_t i = 0; i < raw.size() && out.size() < max_candidates; ++i) {
        if (raw[i] != '{' && raw[i] != '[') continue;
        const auto end = balanced_end(raw, i);
        if (!end) continue;
        auto parsed = Json::parse(raw.substr(i, *end - i), nullptr, /*allow_exceptions=*/false);
        if (!parsed.is_discarded()) out.push_back(std::move(parsed));
    }
    return out;
}

std::vector<Json> json_top_level(std::string_view raw) {
    std::vector<Json> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] != '{' && raw[i] != '[') {
            ++i;
            continue;
        }
        const auto end = balanced_end(raw, i);
        if (end) {
            auto parsed = Json::parse(raw.substr(i, *end - i), nullptr, /*allow_exceptions=*/false);
            if (!parsed.is_discarded()) {
                out.push_back(std::move(parsed));
                i = *end;
                continue;
            }
        }
        ++i;
    }
    return out;
}

Json extract_json(std::string_view raw, SchemaId schema, const ExtraValidator& extra) {
    auto candidates = json_candidates(raw);
    if (candidates.empty()) {
        throw Error(ErrorCode::kNoJsonFound, "no JSON value found in model output");
    }
    std::vector<Violation> first_violations;
    for (auto& candidate : candidates) {
        auto violations = validate(schema, candidate);
        if (violations.empty() && extra) violations = extra(candidate);
        if (violations.empty()) return std::move(candidate);
        if (first_violations.empty()) first_violations = std::move(violations);
    }
    throw Error(ErrorCode::kSchemaViolation,
                "model output violates schema " + std::string(schema_name(schema)),
                to_strings(first_violations));
}

}  // namespace tracegen
