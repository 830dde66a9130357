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

#include "tracegen/http_provider.hpp"

#include <httplib.h>

#include "tracegen/error.hpp"

namespace tracegen {

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
    const auto scheme_end = config_.endpoint.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(ErrorCode::kConfigError, "endpoint must start with http:// or https://: " + config_.endpoint);
    }
    const auto scheme = config_.endpoint.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") throw Error(ErrorCode::kConfigError, "unsupported scheme " + scheme);
    const auto path_start = config_.endpoint.find('/', scheme_end + 3);
    origin_ = config_.endpoint.substr(0, path_start);
    prefix_ = path_start == std::string::npos ? "" : config_.endpoint.substr(path_start);
    while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    if (config_.model.empty()) throw Error(ErrorCode::kConfigError, "model is required");
}

std::string HttpProvider::id() const { return "http/" + config_.model; }

Json HttpProvider::post(const std::string& path, const Json& body) const {
    httplib::Client client(origin_);
    client.set_connection_timeout(config_.timeout_seconds, 0);
    client.set_read_timeout(config_.timeout_seconds, 0);
    client.set_write_timeout(config_.timeout_seconds, 0);
    if (!config_.api_key.empty()) client.set_bearer_token_auth(config_.api_key);
    const auto url = prefix_ + path;
    auto res = client.Post(url, body.dump(), "application/json");
    if (!res) throw TransientProviderError("POST " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status == 429 || res->status >= 500) {
        throw TransientProviderError("POST " + url + " returned HTTP " + std::to_string(res->status));
    }
    if (res->status != 200) {
        throw Error(ErrorCode::kProviderUnavailable,
                    "POST " + url + " returned HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 500));
    }
    auto j = Json::parse(res->body, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::kProviderUnavailable, "POST " + url + " returned non-JSON body");
    return j;
}

GenerationResponse HttpProvider::generate(const GenerationRequest& request) {
    Json messages = Json::array();
    if (!request.system_prompt.empty()) messages.push_back({{"role", "system"}, {"content", request.system_prompt}});
    messages.push_back({{"role", "user"}, {"content", request.user_prompt}});
    const Json body{{"model", config_.model},
                    {"messages", std::move(messages)},
                    {"temperature", request.temperature},
                    {"max_tokens", request.max_output_tokens}};
    const auto j = post("/chat/completions", body);
    try {
        GenerationResponse out;
        out.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
        if (j.contains("usage")) {
            out.input_tokens = j["usage"].value("prompt_tokens", std::uint64_t{0});
            out.output_tokens = j["usage"].value("completion_tokens", std::uint64_t{0});
        }
        out.provider_id = id();
        return out;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::kProviderUnavailable, std::string("unexpected completion response: ") + e.what());
    }
}

std::vector<double> HttpProvider::embed(std::string_view text) {
    if (config_.embedding_model.empty()) throw Error(ErrorCode::kProviderUnavailable, "no embedding model configured");
    if (text.empty()) {
        // Same sentinel as the mock: APIs reject empty input, and zero vectors
        // break cosine metrics.
        std::vector<double> e0(config_.embedding_dim, 0.0);
        if (!e0.empty()) e0[0] = 1.0;
        return e0;
    }
    const auto j = post("/embeddings", Json{{"model", config_.embedding_model}, {"input", std::string(text)}});
    std::vector<double> out;
    try {
        out = j.at("data").at(0).at("embedding").get<std::vector<double>>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::kProviderUnavailable, std::string("unexpected embedding response: ") + e.what());
    }
    if (config_.embedding_dim != 0 && out.size() != config_.embedding_dim) {
        throw Error(ErrorCode::kProviderUnavailable, "embedding dimension " + std::to_string(out.size()) +
                                                         " differs from configured " +
                                                         std::to_string(config_.embedding_dim));
    }
    return out;
}

}  // namespace tracegen
