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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "tracegen/cost_ledger.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/json.hpp"
#include "tracegen/mock_provider.hpp"

namespace tracegen {

enum class ProviderKind { kMock, kHttp };

// Provider config file. Credentials are referenced by environment variable
// name only; an inline "api_key" is rejected.
//
//   {"kind": "http", "endpoint": "https://api.openai.com/v1",
//    "api_key_env": "OPENAI_API_KEY", "model": "...", "embedding_model": "...",
//    "embedding_dim": 1536, "prices": {"input_usd_per_million": 2.5,
//    "output_usd_per_million": 10}, "max_concurrency": 4, "budget_cap_usd": 50,
//    "retry": {"max_attempts": 4, "base_delay_ms": 500, "max_delay_ms": 8000},
//    "timeout_seconds": 120, "mock": {...}}
struct ProviderConfig {
    ProviderKind kind = ProviderKind::kMock;
    std::string endpoint;
    std::string api_key_env;
    std::string model;
    std::string embedding_model;
    std::size_t embedding_dim = 0;
    PriceTable prices = PriceTable::from_usd_per_million(2.5, 10.0);
    std::size_t max_concurrency = 4;
    std::optional<double> budget_cap_usd;
    RetryPolicy retry;
    int timeout_seconds = 120;
    MockOptions mock;
    Json mock_json = Json::object();  // as given, for hashing

    // Throws kConfigError naming the offending key.
    static ProviderConfig from_json(const Json& j);
    static ProviderConfig load(const std::filesystem::path& path);

    // Canonical form for hashing: every field, with the environment variable
    // name but never its value.
    Json to_json() const;
};

// Builds the provider (reading the API key from the environment for http)
// and wraps it in a gateway. `budget_cap` overrides the config's cap.
std::unique_ptr<Gateway> make_gateway(const ProviderConfig& config, std::optional<Money> budget_cap = std::nullopt);

}  // namespace tracegen
