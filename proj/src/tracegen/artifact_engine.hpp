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
#include <utility>
#include <vector>

#include "tracegen/artifact.hpp"
#include "tracegen/events.hpp"
#include "tracegen/persona.hpp"

namespace tracegen {

class Gateway;
class BudgetScope;

inline constexpr std::size_t kDefaultMaxCycles = 3;
inline constexpr std::size_t kMaxCyclesCeiling = 5;

// Asks the model for the artifact kind and direction; (email, received) when
// the answer is unusable or the call fails.
std::pair<ArtifactKind, Direction> choose_artifact_kind(Gateway& gateway, const ExpandedEvent& event,
                                                        const PersonaProfile& profile,
                                                        std::vector<std::string>* warnings = nullptr,
                                                        BudgetScope* scope = nullptr);

// Free-text outline. An empty answer is retried once, then kOutlineFailed.
std::string generate_outline(Gateway& gateway, ArtifactKind kind, Direction direction, const ExpandedEvent& event,
                             const PersonaProfile& profile, BudgetScope* scope = nullptr);

// Instantiates the artifact from the outline. kGenerationFailed when the
// output is still invalid after one repair.
Artifact generate_artifact(Gateway& gateway, const std::string& outline, const ExpandedEvent& event,
                           std::size_t event_id, const PersonaProfile& profile, ArtifactKind kind, Direction direction,
                           BudgetScope* scope = nullptr);

// One critique per axis, in kAllCriticAxes order. A failed critic counts as
// an approval with feedback "critic unavailable".
std::vector<Critique> critique(Gateway& gateway, const Artifact& artifact, const ExpandedEvent& event,
                               const PersonaProfile& profile, std::vector<std::string>* warnings = nullptr,
                               BudgetScope* scope = nullptr);

// The feedback of every revise verdict, one "[axis] feedback" line each.
std::string joint_feedback(const std::vector<Critique>& critiques);

// Revises against the joint feedback; keeps `artifact` when revision fails.
Artifact revise(Gateway& gateway, const Artifact& artifact, const std::vector<Critique>& critiques,
                std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

struct RefineOptions {
    std::size_t max_cycles = kDefaultMaxCycles;

    // Throws kInvalidArgument outside 1..kMaxCyclesCeiling.
    void validate() const;
};

struct RefinedArtifact {
    Artifact artifact;
    std::size_t cycles_used = 0;
    bool approved = false;
    std::vector<Critique> last_critiques;
};

// Outline, generate, then up to max_cycles rounds of critique, each followed
// by a revision unless all three critics approve. Gateway calls per artifact:
// 2 + 3c + (c - 1) when approved in cycle c, 2 + 4 * max_cycles otherwise.
RefinedArtifact refine(Gateway& gateway, const ExpandedEvent& event, std::size_t event_id,
                       const PersonaProfile& profile, ArtifactKind kind, Direction direction,
                       const RefineOptions& options = {}, std::vector<std::string>* warnings = nullptr,
                       BudgetScope* scope = nullptr);

// choose_artifact_kind followed by the refine loop (one extra call).
RefinedArtifact refine(Gateway& gateway, const ExpandedEvent& event, std::size_t event_id,
                       const PersonaProfile& profile, const RefineOptions& options = {},
                       std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

}  // namespace tracegen
