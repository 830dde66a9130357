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

#include "tracegen/gateway.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "tracegen/text.hpp"

namespace tracegen {

void GenerationRequest::validate() const {
    if (text::trim(system_prompt).empty()) throw Error(ErrorCode::kInvalidRequest, "system_prompt is empty");
    if (text::trim(user_prompt).empty()) throw Error(ErrorCode::kInvalidRequest, "user_prompt is empty");
    if (!(temperature >= 0.0 && temperature <= 2.0)) {
        throw Error(ErrorCode::kInvalidRequest, "temperature must be in [0, 2]");
    }
    if (max_output_tokens == 0) throw Error(ErrorCode::kInvalidRequest, "max_output_tokens must be positive");
}

TokenEstimate Provider::estimate(const GenerationRequest& request) const {
    const auto bytes = request.system_prompt.size() + request.user_prompt.size();
    return TokenEstimate{(bytes + 3) / 4, request.max_output_tokens};
}

std::chrono::milliseconds RetryPolicy::delay_for(int attempt) const {
    const double scaled = static_cast<double>(base_delay.count()) * std::ldexp(1.0, std::max(0, attempt - 1));
    return std::chrono::milliseconds(
        static_cast<long long>(std::min(scaled, static_cast<double>(max_delay.count()))));
}

// RAII hold on one of the gateway's concurrency slots.
class Gateway::Slot {
public:
    explicit Slot(Gateway& g) : g_(g) {
        std::unique_lock lock(g_.slots_mu_);
        g_.slots_cv_.wait(lock, [&] { return g_.in_flight_ < g_.options_.max_concurrency; });
        ++g_.in_flight_;
        g_.peak_in_flight_ = std::max(g_.peak_in_flight_, g_.in_flight_);
    }
    ~Slot() {
        {
            std::lock_guard lock(g_.slots_mu_);
            --g_.in_flight_;
        }
        g_.slots_cv_.notify_one();
    }
    Slot(const Slot&) = delete;
    Slot& operator=(const Slot&) = delete;

private:
    Gateway& g_;
};

Gateway::Gateway(std::shared_ptr<Provider> provider, GatewayOptions options)
    : provider_(std::move(provider)), options_(std::move(options)), ledger_(options_.budget_cap) {
    if (!provider_) throw Error(ErrorCode::kInvalidArgument, "gateway needs a provider");
    if (options_.max_concurrency == 0) throw Error(ErrorCode::kConfigError, "max_concurrency must be positive");
    if (options_.retry.max_attempts < 1) throw Error(ErrorCode::kConfigError, "retry.max_attempts must be >= 1");
    if (!options_.sleep) {
        options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    }
}

template <typename Fn>
auto Gateway::with_retries(Fn&& fn) -> decltype(fn()) {
    for (int attempt = 1;; ++attempt) {
        try {
            Slot slot(*this);
            return fn();
        } catch (const TransientProviderError& e) {
            if (attempt >= options_.retry.max_attempts) {
                throw Error(ErrorCode::kProviderUnavailable, "provider " + provider_->id() + " unavailable after " +
                                                                 std::to_string(attempt) + " attempts: " + e.what());
            }
            options_.sleep(options_.retry.delay_for(attempt));
        }
    }
}

GenerationResponse Gateway::complete(const GenerationRequest& request, BudgetScope* scope) {
    request.validate();
    const auto estimate = provider_->estimate(request);
    const auto reservation =
        ledger_.reserve(options_.prices.cost(estimate.input_tokens, estimate.output_tokens), scope);
    GenerationResponse response;
    try {
        response = with_retries([&] { return provider_->generate(request); });
    } catch (...) {
        ledger_.release(reservation);
        throw;
    }
    ledger_.commit(reservation,
                   CostRecord{request.agent_role, response.input_tokens, response.output_tokens, options_.prices,
                              options_.prices.cost(response.input_tokens, response.output_tokens)});
    return response;
}

std::string repair_suffix(const std::vector<std::string>& problems) {
    std::string out = "\n\nYour previous response could not be used:\n";
    for (const auto& p : problems) out += "- " + p + "\n";
    out += "Respond again with only the corrected JSON output.";
    return out;
}

Json Gateway::complete_json(const GenerationRequest& request, SchemaId schema, const ExtraValidator& extra,
                            BudgetScope* scope) {
    auto response = complete(request, scope);
    try {
        return extract_json(response.text, schema, extra);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoJsonFound && e.code() != ErrorCode::kSchemaViolation) throw;
        std::vector<std::string> problems = e.details();
        if (problems.empty()) problems.push_back(e.what());
        GenerationRequest retry = request;
        retry.user_prompt += repair_suffix(problems);
        retry.agent_role = request.agent_role + ":repair";
        response = complete(retry, scope);
        return extract_json(response.text, schema, extra);
    }
}

EmbeddingVector Gateway::embed(std::string_view text) {
    auto values = with_retries([&] { return provider_->embed(text); });
    for (double v : values) {
        if (!std::isfinite(v)) throw Error(ErrorCode::kProviderUnavailable, "provider returned a non-finite embedding");
    }
    return EmbeddingVector{std::move(values), provider_->id()};
}

std::size_t Gateway::peak_in_flight() const {
    std::lock_guard lock(slots_mu_);
    return peak_in_flight_;
}

}  // namespace tracegen
