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

// Shared fixtures for the unit and acceptance tests.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unistd.h>

#include "tracegen/builtin_data.hpp"
#include "tracegen/demographics.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/mock_provider.hpp"
#include "tracegen/persona.hpp"

namespace tracegen::testing {

inline GatewayOptions quiet_options(std::size_t max_concurrency = 4) {
    GatewayOptions o;
    o.prices = PriceTable::from_usd_per_million(2.5, 10.0);
    o.max_concurrency = max_concurrency;
    o.sleep = [](std::chrono::milliseconds) {};
    return o;
}

inline std::unique_ptr<Gateway> mock_gateway(MockOptions mock = {}, GatewayOptions options = quiet_options()) {
    return std::make_unique<Gateway>(std::make_shared<MockProvider>(std::move(mock)), std::move(options));
}

// Defers to the mock unless the script returns a text for the request.
class ScriptedProvider : public MockProvider {
public:
    using Script = std::function<std::optional<std::string>(const GenerationRequest&)>;

    ScriptedProvider(Script script, MockOptions options = {}) : MockProvider(std::move(options)), script_(std::move(script)) {}

    GenerationResponse generate(const GenerationRequest& request) override {
        auto text = script_(request);
        if (!text) return MockProvider::generate(request);
        GenerationResponse r;
        r.text = std::move(*text);
        r.input_tokens = (request.system_prompt.size() + request.user_prompt.size() + 3) / 4;
        r.output_tokens = (r.text.size() + 3) / 4;
        r.provider_id = id();
        return r;
    }

private:
    Script script_;
};

inline std::unique_ptr<Gateway> scripted_gateway(ScriptedProvider::Script script, MockOptions mock = {},
                                                 GatewayOptions options = quiet_options()) {
    return std::make_unique<Gateway>(std::make_shared<ScriptedProvider>(std::move(script), std::move(mock)),
                                     std::move(options));
}

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

inline DemographicPrior builtin_prior() { return DemographicPrior::from_json(Json::parse(builtin::prior_json())); }

inline PersonaProfile sample_profile(Gateway& gateway, std::uint64_t seed = 1) {
    return generate_profile(gateway, sample_draw(builtin_prior(), seed));
}

inline PersonaProfile sample_profile(std::uint64_t seed = 1) {
    auto gateway = mock_gateway();
    return sample_profile(*gateway, seed);
}

// Fresh, empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("tracegen-" + name + "-" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path source_dir() {
    const char* dir = std::getenv("TRACEGEN_SOURCE_DIR");
    return dir ? std::filesystem::path(dir) : std::filesystem::current_path();
}

}  // namespace tracegen::testing
