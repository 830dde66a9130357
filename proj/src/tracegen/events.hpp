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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracegen/datetime.hpp"
#include "tracegen/json.hpp"
#include "tracegen/schema.hpp"

namespace tracegen {

enum class Frequency { kDaily, kWeekly, kMonthly, kSeasonally, kYearly, kOnce };

std::string_view to_string(Frequency f);
std::optional<Frequency> parse_frequency(std::string_view s);

// An entry of the event memory.
struct SeedEvent {
    std::string event;
    std::string detailed_description;
    Frequency frequency = Frequency::kOnce;

    // Title and description, the text that is hashed and embedded.
    std::string text() const;

    Json to_json() const;
    // Throws kSchemaViolation.
    static SeedEvent from_json(const Json& j);

    bool operator==(const SeedEvent&) const = default;
};

// A node payload of the event forest.
struct ExpandedEvent {
    std::string event;
    std::string detailed_description;
    Frequency frequency = Frequency::kOnce;
    std::string location;  // empty when the event has no fixed place
    std::vector<std::string> other_participants;
    LocalDateTime start_time;
    LocalDateTime end_time;

    Json to_json() const;
    // Throws kSchemaViolation, including for end_time < start_time. A blank
    // string for other_participants reads as an empty list.
    static ExpandedEvent from_json(const Json& j);

    bool operator==(const ExpandedEvent&) const = default;
};

// Schema check plus the start <= end invariant.
std::vector<Violation> validate_expanded_event(const Json& j);

}  // namespace tracegen
