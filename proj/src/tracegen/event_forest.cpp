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

#include "tracegen/event_forest.hpp"

#include <deque>

#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"

namespace tracegen {
namespace {

void note(std::vector<std::string>* warnings, std::string message) {
    if (warnings) warnings->push_back(std::move(message));
}

bool is_budget(const Error& e) { return e.code() == ErrorCode::kBudgetExceeded; }

bool is_output_error(const Error& e) {
    return e.code() == ErrorCode::kNoJsonFound || e.code() == ErrorCode::kSchemaViolation;
}

}  // namespace

std::vector<std::string> EventForest::check() const {
    std::vector<std::string> problems;
    std::vector<int> owners(nodes.size(), 0);
    for (const auto r : roots) {
        if (!contains(r)) {
            problems.push_back("root " + std::to_string(r) + " out of range");
            continue;
        }
        if (nodes[r].parent) problems.push_back("root " + std::to_string(r) + " has a parent");
        if (nodes[r].depth != 0) problems.push_back("root " + std::to_string(r) + " has nonzero depth");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (const auto c : nodes[i].children) {
            if (!contains(c)) {
                problems.push_back("node " + std::to_string(i) + " has child out of range");
                continue;
            }
            ++owners[c];
            if (nodes[c].parent != i) problems.push_back("node " + std::to_string(c) + " parent link mismatch");
            if (nodes[c].depth != nodes[i].depth + 1) problems.push_back("node " + std::to_string(c) + " depth mismatch");
        }
    }
    for (const auto r : roots) {
        if (contains(r)) ++owners[r];
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (owners[i] != 1) {
            problems.push_back("node " + std::to_string(i) + " reachable from " + std::to_string(owners[i]) + " owners");
        }
    }
    return problems;
}

Json EventForest::to_json() const {
    Json j;
    j["roots"] = roots;
    Json out = Json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        out.push_back(Json{{"id", i},
                           {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                           {"depth", n.depth},
                           {"reflected", n.reflected},
                           {"children", n.children},
                           {"event", n.payload.to_json()}});
    }
    j["node_count"] = nodes.size();
    j["nodes"] = std::move(out);
    return j;
}

EventForest EventForest::from_json(const Json& j) {
    EventForest f;
    try {
        f.roots = j.at("roots").get<std::vector<std::size_t>>();
        for (const auto& n : j.at("nodes")) {
            EventNode node;
            node.payload = ExpandedEvent::from_json(n.at("event"));
            if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::size_t>();
            node.children = n.at("children").get<std::vector<std::size_t>>();
            node.depth = n.at("depth").get<std::size_t>();
            node.reflected = n.at("reflected").get<bool>();
            f.nodes.push_back(std::move(node));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParseError, std::string("malformed forest: ") + e.what());
    }
    if (auto problems = f.check(); !problems.empty()) {
        throw Error(ErrorCode::kParseError, "inconsistent forest", problems);
    }
    return f;
}

Json trace_to_json(const std::vector<ExpansionStep>& trace) {
    Json steps = Json::array();
    for (const auto& s : trace) steps.push_back(Json{{"node", s.node}, {"depth", s.depth}, {"children", s.children}});
    return Json{{"expansions", std::move(steps)}};
}

void filter_participants(ExpandedEvent& event, const PersonaProfile& profile, std::vector<std::string>* warnings) {
    std::vector<std::string> kept;
    for (auto& p : event.other_participants) {
        if (profile.knows(p)) {
            kept.push_back(std::move(p));
        } else {
            note(warnings, "participant \"" + p + "\" of \"" + event.event + "\" is not in the social graph; dropped");
        }
    }
    event.other_participants = std::move(kept);
}

ExpandedEvent align_seed(Gateway& gateway, const SeedEvent& seed, const PersonaProfile& profile,
                         std::vector<std::string>* warnings, BudgetScope* scope) {
    Json raw;
    try {
        raw = gateway.complete_json(prompts::align_event(seed.to_json(), profile.to_json()), SchemaId::kExpandedEvent,
                                    validate_expanded_event, scope);
    } catch (const Error& e) {
        if (!is_output_error(e)) throw;
        throw Error(ErrorCode::kAlignmentFailed, "alignment of \"" + seed.event + "\" failed: " + e.what(), e.details());
    }
    auto event = ExpandedEvent::from_json(raw);
    filter_participants(event, profile, warnings);
    return event;
}

std::vector<ExpandedEvent> expand_event(Gateway& gateway, const ExpandedEvent& event, const PersonaProfile& profile,
                                        std::vector<std::string>* warnings, BudgetScope* scope) {
    Json list;
    try {
        list = gateway.complete_json(prompts::expand_event(event.to_json(), profile.to_json()),
                                     SchemaId::kExpandedEventList, {}, scope);
    } catch (const Error& e) {
        if (is_budget(e)) throw;
        note(warnings, "expansion of \"" + event.event + "\" failed, treated as atomic: " + e.what());
        return {};
    }
    std::vector<ExpandedEvent> children;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto violations = validate_expanded_event(list[i]);
        if (!violations.empty()) {
            note(warnings, "child " + std::to_string(i) + " of \"" + event.event + "\" dropped: " + violations.front().to_string());
            continue;
        }
        auto child = ExpandedEvent::from_json(list[i]);
        filter_participants(child, profile, warnings);
        children.push_back(std::move(child));
    }
    return children;
}

Reflection reflect_event(Gateway& gateway, const ExpandedEvent& event, const PersonaProfile& profile,
                         std::vector<std::string>* warnings, BudgetScope* scope) {
    Json verdict;
    try {
        verdict = gateway.complete_json(prompts::reflect_event(event.to_json(), profile.to_json()), SchemaId::kReflection,
                                        {}, scope);
    } catch (const Error& e) {
        if (is_budget(e)) throw;
        note(warnings, "reflection on \"" + event.event + "\" failed, original kept: " + e.what());
        return Reflection{event, false, false};
    }
    if (verdict["verdict"] == "approve") return Reflection{event, true, false};
    if (!verdict.contains("event")) {
        note(warnings, "reflection on \"" + event.event + "\" asked to revise without an event; original kept");
        return Reflection{event, false, false};
    }
    const auto violations = validate_expanded_event(verdict["event"]);
    if (!violations.empty()) {
        note(warnings, "revision of \"" + event.event + "\" is invalid (" + violations.front().to_string() +
                           "); original kept");
        return Reflection{event, false, false};
    }
    auto revised = ExpandedEvent::from_json(verdict["event"]);
    filter_participants(revised, profile, warnings);
    return Reflection{std::move(revised), true, true};
}

ForestBuild build_forest(Gateway& gateway, const SeedBundle& bundle, const PersonaProfile& profile,
                         const ForestOptions& options, BudgetScope* scope) {
    if (bundle.size() == 0) throw Error(ErrorCode::kInvalidArgument, "seed bundle is empty");
    if (options.cap == 0) throw Error(ErrorCode::kInvalidArgument, "forest cap must be positive");
    ForestBuild out;
    auto& forest = out.forest;
    auto* warnings = &out.warnings;

    auto insert = [&](Reflection r, std::optional<std::size_t> parent) {
        EventNode node;
        node.payload = std::move(r.event);
        node.reflected = r.reflected;
        node.parent = parent;
        node.depth = parent ? forest.nodes[*parent].depth + 1 : 0;
        const auto id = forest.nodes.size();
        forest.nodes.push_back(std::move(node));
        if (parent) {
            forest.nodes[*parent].children.push_back(id);
        } else {
            forest.roots.push_back(id);
        }
        return id;
    };

    std::deque<std::size_t> queue;
    for (const auto& seed : bundle.all()) {
        if (forest.node_count() >= options.cap) break;
        ExpandedEvent root;
        try {
            root = align_seed(gateway, seed, profile, warnings, scope);
        } catch (const Error& e) {
            if (is_budget(e)) throw;
            warnings->push_back("seed \"" + seed.event + "\" skipped: " + e.what());
            continue;
        }
        queue.push_back(insert(reflect_event(gateway, root, profile, warnings, scope), std::nullopt));
    }

    while (!queue.empty() && forest.node_count() < options.cap) {
        const auto id = queue.front();
        queue.pop_front();
        auto children = expand_event(gateway, forest.nodes[id].payload, profile, warnings, scope);
        const auto room = options.cap - forest.node_count();
        if (children.size() > room) children.resize(room);
        for (const auto& child : children) {
            queue.push_back(insert(reflect_event(gateway, child, profile, warnings, scope), id));
        }
        out.trace.push_back(ExpansionStep{id, forest.nodes[id].depth, children.size()});
    }
    for (const auto& w : out.warnings) gateway.diagnostics().warn(w);
    return out;
}

}  // namespace tracegen
