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
#include <string>
#include <string_view>
#include <vector>

#include "tracegen/error.hpp"
#include "tracegen/schema.hpp"

namespace tracegen {

inline constexpr double kDefaultTemperature = 0.9;

struct GenerationRequest {
    std::string system_prompt;
    std::string user_prompt;
    double temperature = kDefaultTemperature;
    std::uint32_t max_output_tokens = 2048;
    // Output contract the caller expects; the mock provider generates to it.
    std::optional<SchemaId> schema_hint;
    // Which agent issued the call, for the cost ledger.
    std::string agent_role = "unspecified";

    // Throws Error(kInvalidRequest).
    void validate() const;
};

struct GenerationResponse {
    std::string text;
    std::uint64_t input_tokens = 0;
    std::uint64_t output_tokens = 0;
    std::string provider_id;
};

struct EmbeddingVector {
    std::vector<double> values;
    std::string provider_id;

    std::size_t dim() const { return values.size(); }
};

struct TokenEstimate {
    std::uint64_t input_tokens = 0;
    std::uint64_t output_tokens = 0;
};

// Thrown by providers for failures worth retrying (rate limits, 5xx,
// dropped connections). Anything else propagates immediately.
class TransientProviderError : public Error {
public:
    explicit TransientProviderError(const std::string& message) : Error(ErrorCode::kProviderUnavailable, message) {}
};

// A text-generation and embedding backend. Implementations must be safe to
// call from several threads at once.
class Provider {
public:
    virtual ~Provider() = default;

    virtual std::string id() const = 0;
    virtual GenerationResponse generate(const GenerationRequest& request) = 0;
    virtual std::vector<double> embed(std::string_view text) = 0;
    virtual std::size_t embedding_dim() const = 0;

    // Upper-bound token usage for budget reservation. The default charges
    // one token per four input bytes plus the full output allowance.
    virtual TokenEstimate estimate(const GenerationRequest& request) const;
};

}  // namespace tracegen
