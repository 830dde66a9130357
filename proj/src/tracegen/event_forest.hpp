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
#include <optional>
#include <string>
#include <vector>

#include "tracegen/event_memory.hpp"
#include "tracegen/events.hpp"
#include "tracegen/json.hpp"
#include "tracegen/persona.hpp"

namespace tracegen {

class Gateway;
class BudgetScope;

inline constexpr std::size_t kDefaultForestCap = 300;

struct EventNode {
    ExpandedEvent payload;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
    std::size_t depth = 0;
    bool reflected = false;

    bool operator==(const EventNode&) const = default;
};

// Arena of event trees. Node ids are indices into `nodes`.
struct EventForest {
    std::vector<std::size_t> roots;
    std::vector<EventNode> nodes;

    std::size_t node_count() const { return nodes.size(); }
    bool contains(std::size_t id) const { return id < nodes.size(); }

    // Every structural invariant violation (parent/child links, depths,
    // reachability); empty means consistent.
    std::vector<std::string> check() const;

    Json to_json() const;
    // Throws kParseError / kSchemaViolation.
    static EventForest from_json(const Json& j);

    bool operator==(const EventForest&) const = default;
};

// One dequeued node: its id, depth, and the number of children inserted.
struct ExpansionStep {
    std::size_t node = 0;
    std::size_t depth = 0;
    std::size_t children = 0;
};

Json trace_to_json(const std::vector<ExpansionStep>& trace);

// Drops participants outside the profile's social graph, one warning each.
void filter_participants(ExpandedEvent& event, const PersonaProfile& profile, std::vector<std::string>* warnings);

// Specializes a seed event to the persona. Throws kAlignmentFailed when the
// model output stays invalid after one repair.
ExpandedEvent align_seed(Gateway& gateway, const SeedEvent& seed, const PersonaProfile& profile,
                         std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

// Children of `event`; empty means atomic. Invalid children are dropped, and
// a failed call counts as atomic. Both leave a warning.
std::vector<ExpandedEvent> expand_event(Gateway& gateway, const ExpandedEvent& event, const PersonaProfile& profile,
                                        std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

struct Reflection {
    ExpandedEvent event;
    bool reflected = false;  // false when the check failed and the input was kept
    bool revised = false;
};

Reflection reflect_event(Gateway& gateway, const ExpandedEvent& event, const PersonaProfile& profile,
                         std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

struct ForestOptions {
    std::size_t cap = kDefaultForestCap;
};

struct ForestBuild {
    EventForest forest;
    std::vector<ExpansionStep> trace;
    std::vector<std::string> warnings;
};

// Aligns and reflects every bundle event into a root, then expands
// breadth-first, reflecting each child, until the queue drains or the forest
// holds `cap` nodes. The batch that crosses the cap is truncated to land on
// it exactly. Only kBudgetExceeded and kInvalidArgument escape.
ForestBuild build_forest(Gateway& gateway, const SeedBundle& bundle, const PersonaProfile& profile,
                         const ForestOptions& options = {}, BudgetScope* scope = nullptr);

}  // namespace tracegen
