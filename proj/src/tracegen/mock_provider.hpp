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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tracegen/artifact.hpp"
#include "tracegen/json.hpp"
#include "tracegen/provider.hpp"

namespace tracegen {

enum class ExpansionPolicy { kMixed, kAlways, kNever };
enum class ReflectionPolicy { kMixed, kApprove, kRevise };
enum class CriticPolicy { kMixed, kApprove };

struct MockOptions {
    std::uint64_t seed = 0;
    std::size_t embedding_dim = 128;

    ExpansionPolicy expansion = ExpansionPolicy::kMixed;
    std::size_t always_children = 3;
    // Chance that a node expands under kMixed, and the child range when it does.
    double expand_probability = 0.3;

    ReflectionPolicy reflection = ReflectionPolicy::kMixed;
    CriticPolicy critics = CriticPolicy::kApprove;
    // Axes whose critic always answers "revise", regardless of `critics`.
    std::set<CriticAxis> revising_critics;

    // Forces the artifact choice; otherwise keywords in the event decide.
    std::optional<std::pair<ArtifactKind, Direction>> fixed_kind;

    // Judge scores: 0 draws each axis from 3..5, otherwise every axis gets this.
    int judge_score = 0;

    // Synthetic token counts reported for every call (both must be set).
    std::optional<std::uint64_t> fixed_input_tokens;
    std::optional<std::uint64_t> fixed_output_tokens;

    // Throws Error(kConfigError) on unknown keys or bad values.
    static MockOptions from_json(const Json& j);
};

// Offline provider. Every response is a pure function of (prompt, seed):
// the mock reads the JSON context embedded in the prompt, and generates
// output that satisfies the request's schema_hint. Embeddings are feature-
// hashed bags of words, so texts sharing vocabulary land close together.
class MockProvider : public Provider {
public:
    explicit MockProvider(MockOptions options = {});

    std::string id() const override;
    GenerationResponse generate(const GenerationRequest& request) override;
    std::vector<double> embed(std::string_view text) override;
    std::size_t embedding_dim() const override { return options_.embedding_dim; }
    TokenEstimate estimate(const GenerationRequest& request) const override;

    const MockOptions& options() const { return options_; }

    // The raw response text (before token accounting), for subclasses that
    // script individual agents and defer to the mock for the rest.
    std::string respond(const GenerationRequest& request) const;

private:
    MockOptions options_;
};

// Keyword routing used by the mock's artifact choice; exposed for tests.
std::pair<ArtifactKind, Direction> route_artifact_kind(std::string_view event_text, std::uint64_t salt);
PassKind route_pass_kind(std::string_view event_text);

}  // namespace tracegen
