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

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>

#include "tracegen/cost_ledger.hpp"
#include "tracegen/diagnostics.hpp"
#include "tracegen/json.hpp"
#include "tracegen/json_extract.hpp"
#include "tracegen/provider.hpp"

namespace tracegen {

struct RetryPolicy {
    int max_attempts = 4;
    std::chrono::milliseconds base_delay{500};
    std::chrono::milliseconds max_delay{8000};

    // Delay before retry number `attempt` (1-based): base * 2^(attempt-1), capped.
    std::chrono::milliseconds delay_for(int attempt) const;
};

struct GatewayOptions {
    PriceTable prices;
    std::size_t max_concurrency = 4;
    std::optional<Money> budget_cap;
    RetryPolicy retry;
    // Injected so tests can retry without wall-clock waits.
    std::function<void(std::chrono::milliseconds)> sleep;
};

// Uniform access to one provider: bounded concurrency, retry with exponential
// backoff, budget enforcement, cost accounting, and strict JSON extraction.
// Safe for concurrent callers.
class Gateway {
public:
    Gateway(std::shared_ptr<Provider> provider, GatewayOptions options);

    Gateway(const Gateway&) = delete;
    Gateway& operator=(const Gateway&) = delete;

    // Errors: kInvalidRequest, kBudgetExceeded, kProviderUnavailable.
    GenerationResponse complete(const GenerationRequest& request, BudgetScope* scope = nullptr);

    // complete() followed by extract_json(). Output that yields no valid JSON
    // triggers exactly one regeneration with the violations appended to the
    // prompt; a second failure rethrows kNoJsonFound / kSchemaViolation.
    Json complete_json(const GenerationRequest& request, SchemaId schema, const ExtraValidator& extra = {},
                       BudgetScope* scope = nullptr);

    EmbeddingVector embed(std::string_view text);

    CostLedger& ledger() { return ledger_; }
    const CostLedger& ledger() const { return ledger_; }
    Diagnostics& diagnostics() { return diagnostics_; }
    Provider& provider() { return *provider_; }
    const GatewayOptions& options() const { return options_; }

    // Highest number of simultaneous provider calls seen so far.
    std::size_t peak_in_flight() const;

private:
    class Slot;

    template <typename Fn>
    auto with_retries(Fn&& fn) -> decltype(fn());

    std::shared_ptr<Provider> provider_;
    GatewayOptions options_;
    CostLedger ledger_;
    Diagnostics diagnostics_;

    mutable std::mutex slots_mu_;
    std::condition_variable slots_cv_;
    std::size_t in_flight_ = 0;
    std::size_t peak_in_flight_ = 0;
};

// Text appended to a prompt when its previous answer was unusable.
std::string repair_suffix(const std::vector<std::string>& problems);

}  // namespace tracegen
