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

#include "tracegen/events.hpp"

#include "tracegen/error.hpp"
#include "tracegen/text.hpp"

namespace tracegen {

std::string_view to_string(Frequency f) {
    switch (f) {
        case Frequency::kDaily: return "daily";
        case Frequency::kWeekly: return "weekly";
        case Frequency::kMonthly: return "monthly";
        case Frequency::kSeasonally: return "seasonally";
        case Frequency::kYearly: return "yearly";
        case Frequency::kOnce: return "once";
    }
    return "once";
}

std::optional<Frequency> parse_frequency(std::string_view s) {
    for (auto f : {Frequency::kDaily, Frequency::kWeekly, Frequency::kMonthly, Frequency::kSeasonally,
                   Frequency::kYearly, Frequency::kOnce}) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

std::string SeedEvent::text() const {
    if (detailed_description.empty()) return event;
    return event + ". " + detailed_description;
}

Json SeedEvent::to_json() const {
    return Json{{"event", event}, {"detailed_description", detailed_description}, {"frequency", to_string(frequency)}};
}

SeedEvent SeedEvent::from_json(const Json& j) {
    const auto violations = validate(SchemaId::kSeedEvent, j);
    if (!violations.empty()) {
        throw Error(ErrorCode::kSchemaViolation, "invalid seed event", to_strings(violations));
    }
    return SeedEvent{j["event"].get<std::string>(), j["detailed_description"].get<std::string>(),
                     *parse_frequency(j["frequency"].get<std::string>())};
}

Json ExpandedEvent::to_json() const {
    return Json{{"event", event},
                {"detailed_description", detailed_description},
                {"frequency", to_string(frequency)},
                {"location", location},
                {"other_participants", other_participants},
                {"start_time", start_time.to_string()},
                {"end_time", end_time.to_string()}};
}

std::vector<Violation> validate_expanded_event(const Json& j) {
    auto violations = validate(SchemaId::kExpandedEvent, j);
    if (!violations.empty()) return violations;
    const auto start = LocalDateTime::parse(j["start_time"].get<std::string>());
    const auto end = LocalDateTime::parse(j["end_time"].get<std::string>());
    if (*end < *start) violations.push_back({"end_time", "end_time precedes start_time"});
    return violations;
}

ExpandedEvent ExpandedEvent::from_json(const Json& j) {
    const auto violations = validate_expanded_event(j);
    if (!violations.empty()) {
        throw Error(ErrorCode::kSchemaViolation, "invalid expanded event", to_strings(violations));
    }
    ExpandedEvent e;
    e.event = j["event"].get<std::string>();
    e.detailed_description = j["detailed_description"].get<std::string>();
    e.frequency = *parse_frequency(j["frequency"].get<std::string>());
    e.location = j["location"].get<std::string>();
    if (j["other_participants"].is_array()) {
        for (const auto& p : j["other_participants"]) {
            const auto name = std::string(text::trim(p.get<std::string>()));
            if (!name.empty()) e.other_participants.push_back(name);
        }
    } else {
        const auto name = std::string(text::trim(j["other_participants"].get<std::string>()));
        if (!name.empty()) e.other_participants.push_back(name);
    }
    e.start_time = *LocalDateTime::parse(j["start_time"].get<std::string>());
    e.end_time = *LocalDateTime::parse(j["end_time"].get<std::string>());
    return e;
}

}  // namespace tracegen
