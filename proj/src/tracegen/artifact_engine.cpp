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

#include "tracegen/artifact_engine.hpp"

#include <algorithm>

#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

void note(std::vector<std::string>* warnings, std::string message) {
    if (warnings) warnings->push_back(std::move(message));
}

bool is_budget(const Error& e) { return e.code() == ErrorCode::kBudgetExceeded; }

bool is_output_error(const Error& e) {
    return e.code() == ErrorCode::kNoJsonFound || e.code() == ErrorCode::kSchemaViolation;
}

std::vector<Violation> critique_rules(const Json& j) {
    if (j["verdict"] == "revise" && text::trim(j["feedback"].get<std::string>()).empty()) {
        return {{"feedback", "feedback is required when the verdict is revise"}};
    }
    return {};
}

}  // namespace

void RefineOptions::validate() const {
    if (max_cycles < 1 || max_cycles > kMaxCyclesCeiling) {
        throw Error(ErrorCode::kInvalidArgument,
                    "max_cycles must be in 1.." + std::to_string(kMaxCyclesCeiling));
    }
}

std::pair<ArtifactKind, Direction> choose_artifact_kind(Gateway& gateway, const ExpandedEvent& event,
                                                        const PersonaProfile& profile,
                                                        std::vector<std::string>* warnings, BudgetScope* scope) {
    const std::pair fallback{ArtifactKind::kEmail, Direction::kReceived};
    Json choice;
    try {
        // No repair round here: a bad answer simply falls back.
        const auto response = gateway.complete(prompts::choose_artifact(event.to_json(), profile.to_json()), scope);
        choice = extract_json(response.text, SchemaId::kArtifactChoice);
    } catch (const Error& e) {
        if (is_budget(e)) throw;
        note(warnings, "artifact choice for \"" + event.event + "\" unusable, using email/received: " + e.what());
        return fallback;
    }
    return {*parse_artifact_kind(choice["kind"].get<std::string>()),
            *parse_direction(choice["direction"].get<std::string>())};
}

std::string generate_outline(Gateway& gateway, ArtifactKind kind, Direction direction, const ExpandedEvent& event,
                             const PersonaProfile& profile, BudgetScope* scope) {
    const auto request = prompts::outline(kind, direction, event.to_json(), profile.to_json());
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto response = gateway.complete(request, scope);
        const auto trimmed = text::trim(response.text);
        if (!trimmed.empty()) return std::string(trimmed);
    }
    throw Error(ErrorCode::kOutlineFailed, "empty outline for \"" + event.event + "\" after one retry");
}

Artifact generate_artifact(Gateway& gateway, const std::string& outline, const ExpandedEvent& event,
                           std::size_t event_id, const PersonaProfile& profile, ArtifactKind kind, Direction direction,
                           BudgetScope* scope) {
    Json raw;
    try {
        raw = gateway.complete_json(prompts::generate_artifact(kind, direction, outline, event.to_json(), profile.to_json()),
                                    schema_for(kind), [kind](const Json& j) { return validate_payload(kind, j); }, scope);
    } catch (const Error& e) {
        if (!is_output_error(e)) throw;
        throw Error(ErrorCode::kGenerationFailed,
                    std::string(to_string(kind)) + " for \"" + event.event + "\" failed: " + e.what(), e.details());
    }
    return Artifact{payload_from_json(kind, raw), event_id, direction};
}

std::vector<Critique> critique(Gateway& gateway, const Artifact& artifact, const ExpandedEvent& event,
                               const PersonaProfile& profile, std::vector<std::string>* warnings, BudgetScope* scope) {
    std::vector<Critique> out;
    const auto payload = payload_to_json(artifact.payload);
    for (const auto axis : kAllCriticAxes) {
        try {
            const auto j = gateway.complete_json(
                prompts::critique(axis, artifact.kind(), payload, event.to_json(), profile.to_json()), SchemaId::kCritique,
                critique_rules, scope);
            out.push_back(Critique{axis, j["verdict"] == "revise" ? Verdict::kRevise : Verdict::kApprove,
                                   j["feedback"].get<std::string>()});
        } catch (const Error& e) {
            if (is_budget(e)) throw;
            note(warnings, std::string(to_string(axis)) + " critic unavailable for \"" + event.event + "\": " + e.what());
            out.push_back(Critique{axis, Verdict::kApprove, "critic unavailable"});
        }
    }
    return out;
}

std::string joint_feedback(const std::vector<Critique>& critiques) {
    std::string out;
    for (const auto& c : critiques) {
        if (c.verdict != Verdict::kRevise) continue;
        if (!out.empty()) out += "\n";
        out += "[" + std::string(to_string(c.axis)) + "] " + c.feedback;
    }
    return out;
}

Artifact revise(Gateway& gateway, const Artifact& artifact, const std::vector<Critique>& critiques,
                std::vector<std::string>* warnings, BudgetScope* scope) {
    const auto kind = artifact.kind();
    try {
        const auto raw = gateway.complete_json(
            prompts::revise(kind, payload_to_json(artifact.payload), joint_feedback(critiques)), schema_for(kind),
            [kind](const Json& j) { return validate_payload(kind, j); }, scope);
        return Artifact{payload_from_json(kind, raw), artifact.event_id, artifact.direction};
    } catch (const Error& e) {
        if (is_budget(e)) throw;
        note(warnings, "revision failed, prior version kept: " + std::string(e.what()));
        return artifact;
    }
}

RefinedArtifact refine(Gateway& gateway, const ExpandedEvent& event, std::size_t event_id,
                       const PersonaProfile& profile, ArtifactKind kind, Direction direction,
                       const RefineOptions& options, std::vector<std::string>* warnings, BudgetScope* scope) {
    options.validate();
    const auto outline = generate_outline(gateway, kind, direction, event, profile, scope);
    RefinedArtifact out;
    out.artifact = generate_artifact(gateway, outline, event, event_id, profile, kind, direction, scope);
    for (std::size_t cycle = 1; cycle <= options.max_cycles; ++cycle) {
        out.cycles_used = cycle;
        out.last_critiques = critique(gateway, out.artifact, event, profile, warnings, scope);
        const bool all_approve = std::all_of(out.last_critiques.begin(), out.last_critiques.end(),
                                             [](const Critique& c) { return c.verdict == Verdict::kApprove; });
        if (all_approve) {
            out.approved = true;
            return out;
        }
        out.artifact = revise(gateway, out.artifact, out.last_critiques, warnings, scope);
    }
    return out;
}

RefinedArtifact refine(Gateway& gateway, const ExpandedEvent& event, std::size_t event_id,
                       const PersonaProfile& profile, const RefineOptions& options, std::vector<std::string>* warnings,
                       BudgetScope* scope) {
    options.validate();
    const auto [kind, direction] = choose_artifact_kind(gateway, event, profile, warnings, scope);
    return refine(gateway, event, event_id, profile, kind, direction, options, warnings, scope);
}

}  // namespace tracegen
