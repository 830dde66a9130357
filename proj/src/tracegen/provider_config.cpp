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

#include "tracegen/provider_config.hpp"

#include <cstdlib>
#include <set>

#include "tracegen/error.hpp"
#include "tracegen/http_provider.hpp"

namespace tracegen {
namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::kConfigError, message); }

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    try {
        return j[key].get<T>();
    } catch (const Json::exception&) {
        bad(std::string("provider config: \"") + key + "\" has the wrong type");
    }
}

void reject_unknown(const Json& j, const std::set<std::string>& known, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) bad(where + ": unknown key \"" + it.key() + "\"");
    }
}

}  // namespace

ProviderConfig ProviderConfig::from_json(const Json& j) {
    if (!j.is_object()) bad("provider config must be a JSON object");
    if (j.contains("api_key")) bad("provider config: inline \"api_key\" is not allowed, name a variable in \"api_key_env\"");
    reject_unknown(j,
                   {"kind", "endpoint", "api_key_env", "model", "embedding_model", "embedding_dim", "prices",
                    "max_concurrency", "budget_cap_usd", "retry", "timeout_seconds", "mock"},
                   "provider config");
    ProviderConfig c;
    const auto kind = get_or<std::string>(j, "kind", "mock");
    if (kind == "mock") {
        c.kind = ProviderKind::kMock;
    } else if (kind == "http") {
        c.kind = ProviderKind::kHttp;
    } else {
        bad("provider config: kind must be \"mock\" or \"http\"");
    }
    c.endpoint = get_or<std::string>(j, "endpoint", "");
    c.api_key_env = get_or<std::string>(j, "api_key_env", "");
    c.model = get_or<std::string>(j, "model", "");
    c.embedding_model = get_or<std::string>(j, "embedding_model", "");
    c.embedding_dim = get_or<std::size_t>(j, "embedding_dim", 0);
    if (j.contains("prices")) {
        const auto& p = j["prices"];
        if (!p.is_object()) bad("provider config: prices must be an object");
        reject_unknown(p, {"input_usd_per_million", "output_usd_per_million"}, "prices");
        const double in = get_or<double>(p, "input_usd_per_million", -1);
        const double out = get_or<double>(p, "output_usd_per_million", -1);
        if (in < 0 || out < 0) bad("prices: input_usd_per_million and output_usd_per_million must be >= 0");
        c.prices = PriceTable::from_usd_per_million(in, out);
    }
    c.max_concurrency = get_or<std::size_t>(j, "max_concurrency", c.max_concurrency);
    if (c.max_concurrency == 0) bad("provider config: max_concurrency must be >= 1");
    if (j.contains("budget_cap_usd") && !j["budget_cap_usd"].is_null()) {
        c.budget_cap_usd = get_or<double>(j, "budget_cap_usd", 0.0);
    }
    if (c.budget_cap_usd && *c.budget_cap_usd < 0) bad("provider config: budget_cap_usd must be >= 0");
    if (j.contains("retry")) {
        const auto& r = j["retry"];
        if (!r.is_object()) bad("provider config: retry must be an object");
        reject_unknown(r, {"max_attempts", "base_delay_ms", "max_delay_ms"}, "retry");
        c.retry.max_attempts = get_or<int>(r, "max_attempts", c.retry.max_attempts);
        c.retry.base_delay = std::chrono::milliseconds(get_or<long>(r, "base_delay_ms", 500));
        c.retry.max_delay = std::chrono::milliseconds(get_or<long>(r, "max_delay_ms", 8000));
        if (c.retry.max_attempts < 1) bad("retry.max_attempts must be >= 1");
    }
    c.timeout_seconds = get_or<int>(j, "timeout_seconds", c.timeout_seconds);
    if (j.contains("mock")) {
        c.mock_json = j["mock"];
        c.mock = MockOptions::from_json(c.mock_json);
    }
    if (c.kind == ProviderKind::kHttp) {
        if (c.endpoint.empty()) bad("provider config: http provider needs \"endpoint\"");
        if (c.model.empty()) bad("provider config: http provider needs \"model\"");
        if (c.embedding_model.empty() || c.embedding_dim == 0) {
            bad("provider config: http provider needs \"embedding_model\" and \"embedding_dim\"");
        }
    }
    return c;
}

ProviderConfig ProviderConfig::load(const std::filesystem::path& path) {
    std::string raw;
    try {
        raw = read_file(path);
    } catch (const Error& e) {
        bad(e.what());
    }
    auto j = Json::parse(raw, nullptr, false, true);
    if (j.is_discarded()) bad(path.string() + " is not valid JSON");
    return from_json(j);
}

Json ProviderConfig::to_json() const {
    return Json{{"kind", kind == ProviderKind::kMock ? "mock" : "http"},
                {"endpoint", endpoint},
                {"api_key_env", api_key_env},
                {"model", model},
                {"embedding_model", embedding_model},
                {"embedding_dim", embedding_dim},
                {"prices",
                 Json{{"input_micro_usd_per_million", prices.input_micro_usd_per_million},
                      {"output_micro_usd_per_million", prices.output_micro_usd_per_million}}},
                {"max_concurrency", max_concurrency},
                {"budget_cap_usd", budget_cap_usd ? Json(*budget_cap_usd) : Json(nullptr)},
                {"retry",
                 Json{{"max_attempts", retry.max_attempts},
                      {"base_delay_ms", retry.base_delay.count()},
                      {"max_delay_ms", retry.max_delay.count()}}},
                {"timeout_seconds", timeout_seconds},
                {"mock", mock_json}};
}

std::unique_ptr<Gateway> make_gateway(const ProviderConfig& config, std::optional<Money> budget_cap) {
    std::shared_ptr<Provider> provider;
    if (config.kind == ProviderKind::kMock) {
        provider = std::make_shared<MockProvider>(config.mock);
    } else {
        HttpProviderConfig http;
        http.endpoint = config.endpoint;
        http.model = config.model;
        http.embedding_model = config.embedding_model;
        http.embedding_dim = config.embedding_dim;
        http.timeout_seconds = config.timeout_seconds;
        if (!config.api_key_env.empty()) {
            const char* key = std::getenv(config.api_key_env.c_str());
            if (key == nullptr || *key == '\0') bad("environment variable " + config.api_key_env + " is not set");
            http.api_key = key;
        }
        provider = std::make_shared<HttpProvider>(std::move(http));
    }
    GatewayOptions options;
    options.prices = config.prices;
    options.max_concurrency = config.max_concurrency;
    options.retry = config.retry;
    if (budget_cap) {
        options.budget_cap = budget_cap;
    } else if (config.budget_cap_usd) {
        options.budget_cap = Money::from_usd(*config.budget_cap_usd);
    }
    return std::make_unique<Gateway>(std::move(provider), std::move(options));
}

}  // namespace tracegen
