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

#include <string>

#include "tracegen/provider.hpp"

namespace tracegen {

struct HttpProviderConfig {
    // Base URL of an OpenAI-compatible API, e.g. "https://api.openai.com/v1".
    std::string endpoint;
    // Resolved secret; the config file only ever names the environment variable.
    std::string api_key;
    std::string model;
    std::string embedding_model;
    std::size_t embedding_dim = 0;
    int timeout_seconds = 120;
};

// Chat completions and embeddings over HTTP(S). 429, 5xx and transport
// failures raise TransientProviderError so the gateway retries them; other
// failures raise kProviderUnavailable. A client is opened per call, so the
// provider may be shared across threads.
class HttpProvider : public Provider {
public:
    // Throws kConfigError for a malformed endpoint or missing model.
    explicit HttpProvider(HttpProviderConfig config);

    std::string id() const override;
    GenerationResponse generate(const GenerationRequest& request) override;
    std::vector<double> embed(std::string_view text) override;
    std::size_t embedding_dim() const override { return config_.embedding_dim; }

private:
    Json post(const std::string& path, const Json& body) const;

    HttpProviderConfig config_;
    std::string origin_;  // scheme://host[:port]
    std::string prefix_;  // path below the origin, no trailing slash
};

}  // namespace tracegen
