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
#include <utility>
#include <vector>

#include "tracegen/artifact.hpp"
#include "tracegen/json.hpp"
#include "tracegen/provider.hpp"

// Prompt rendering for every agent. Each builder returns a complete request
// (system + user prompt, schema hint, agent role) ready for the gateway.
//
// Convention relied on by the mock provider: structured inputs are embedded
// as pretty-printed JSON, and the input the model should act on always comes
// after any worked examples.
namespace tracegen::prompts {

// Replaces each "{key}" with its value. Unknown placeholders are left alone.
std::string render(std::string_view tmpl, const std::vector<std::pair<std::string, std::string>>& values);

GenerationRequest profile(const Json& demographic_input);

// `persona` is free text (a persona description) or a serialized profile.
GenerationRequest seed_events(std::string_view persona, std::size_t count);

GenerationRequest align_event(const Json& seed_event, const Json& profile);
GenerationRequest expand_event(const Json& event, const Json& profile);
GenerationRequest reflect_event(const Json& event, const Json& profile);

GenerationRequest choose_artifact(const Json& event, const Json& profile);
GenerationRequest outline(ArtifactKind kind, Direction direction, const Json& event, const Json& profile);
GenerationRequest generate_artifact(ArtifactKind kind, Direction direction, std::string_view outline_text,
                                    const Json& event, const Json& profile);
GenerationRequest critique(CriticAxis axis, ArtifactKind kind, const Json& artifact, const Json& event,
                           const Json& profile);
GenerationRequest revise(ArtifactKind kind, const Json& artifact, std::string_view suggestions);

// The judge rubric, with the document substituted for {input}.
GenerationRequest judge(std::string_view email);

// The raw judge template (before substitution), for tests.
std::string_view judge_template();

// Role names recorded in the cost ledger.
namespace role {
inline constexpr std::string_view kPersona = "persona";
inline constexpr std::string_view kSeedEvents = "event_seeds";
inline constexpr std::string_view kAlign = "event_align";
inline constexpr std::string_view kExpand = "event_expand";
inline constexpr std::string_view kReflect = "event_reflect";
inline constexpr std::string_view kChooseArtifact = "artifact_choose";
inline constexpr std::string_view kOutline = "artifact_outline";
inline constexpr std::string_view kGenerate = "artifact_generate";
inline constexpr std::string_view kCritic = "critic";  // suffixed with ":<axis>"
inline constexpr std::string_view kRevise = "artifact_revise";
inline constexpr std::string_view kJudge = "judge";
}  // namespace role

}  // namespace tracegen::prompts
