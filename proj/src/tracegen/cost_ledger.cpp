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

#include "tracegen/cost_ledger.hpp"

#include <cmath>
#include <sstream>

#include "tracegen/error.hpp"

namespace tracegen {

Money Money::from_usd(double usd) { return Money(static_cast<std::int64_t>(std::llround(usd * 1e12))); }

PriceTable PriceTable::from_usd_per_million(double input, double output) {
    if (!(input >= 0.0) || !(output >= 0.0)) {
        throw Error(ErrorCode::kConfigError, "prices must be non-negative");
    }
    return PriceTable{std::llround(input * 1e6), std::llround(output * 1e6)};
}

namespace {

std::string usd_text(Money m) {
    std::ostringstream ss;
    ss.precision(12);
    ss << m.usd();
    return ss.str();
}

}  // namespace

CostLedger::Reservation CostLedger::reserve(Money amount, BudgetScope* scope) {
    // Lock order: ledger, then scope.
    std::lock_guard lock(mu_);
    if (cap_ && total_ + reserved_ + amount > *cap_) {
        throw Error(ErrorCode::kBudgetExceeded, "budget cap of " + usd_text(*cap_) + " USD reached (spent " +
                                                    usd_text(total_) + " USD, next call up to " +
                                                    usd_text(amount) + " USD)",
                    {"global"});
    }
    if (scope != nullptr) {
        std::lock_guard scope_lock(scope->mu_);
        if (scope->cap_ && scope->spent_ + scope->reserved_ + amount > *scope->cap_) {
            throw Error(ErrorCode::kBudgetExceeded, "scope budget of " + usd_text(*scope->cap_) +
                                                        " USD reached (spent " + usd_text(scope->spent_) + " USD)",
                        {"scope"});
        }
        scope->reserved_ += amount;
    }
    reserved_ += amount;
    return Reservation{amount, scope};
}

void CostLedger::commit(const Reservation& reservation, CostRecord record) {
    std::lock_guard lock(mu_);
    reserved_ -= reservation.amount;
    total_ += record.cost;
    if (reservation.scope != nullptr) {
        std::lock_guard scope_lock(reservation.scope->mu_);
        reservation.scope->reserved_ -= reservation.amount;
        reservation.scope->spent_ += record.cost;
        ++reservation.scope->calls_;
    }
    records_.push_back(std::move(record));
}

void CostLedger::release(const Reservation& reservation) {
    std::lock_guard lock(mu_);
    reserved_ -= reservation.amount;
    if (reservation.scope != nullptr) {
        std::lock_guard scope_lock(reservation.scope->mu_);
        reservation.scope->reserved_ -= reservation.amount;
    }
}

void CostLedger::record(CostRecord record, BudgetScope* scope) {
    std::lock_guard lock(mu_);
    total_ += record.cost;
    if (scope != nullptr) {
        std::lock_guard scope_lock(scope->mu_);
        scope->spent_ += record.cost;
        ++scope->calls_;
    }
    records_.push_back(std::move(record));
}

Money CostLedger::total() const {
    std::lock_guard lock(mu_);
    return total_;
}

std::vector<CostRecord> CostLedger::records() const {
    std::lock_guard lock(mu_);
    return records_;
}

std::size_t CostLedger::call_count() const {
    std::lock_guard lock(mu_);
    return records_.size();
}

std::map<std::string, std::size_t> CostLedger::calls_by_role() const {
    std::lock_guard lock(mu_);
    std::map<std::string, std::size_t> out;
    for (const auto& r : records_) ++out[r.agent_role];
    return out;
}

std::uint64_t CostLedger::input_tokens() const {
    std::lock_guard lock(mu_);
    std::uint64_t n = 0;
    for (const auto& r : records_) n += r.input_tokens;
    return n;
}

std::uint64_t CostLedger::output_tokens() const {
    std::lock_guard lock(mu_);
    std::uint64_t n = 0;
    for (const auto& r : records_) n += r.output_tokens;
    return n;
}

}  // namespace tracegen
