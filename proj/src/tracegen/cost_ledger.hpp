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

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tracegen {

// Exact currency amount in pico-USD (1e-12 USD). A price quoted in micro-USD
// per million tokens times a token count lands exactly on this unit, so
// ledger sums never drift.
class Money {
public:
    constexpr Money() = default;
    static constexpr Money from_pico(std::int64_t pico) { return Money(pico); }
    // Rounds to the nearest pico-USD.
    static Money from_usd(double usd);

    constexpr std::int64_t pico() const { return pico_; }
    double usd() const { return static_cast<double>(pico_) / 1e12; }

    constexpr Money operator+(Money o) const { return Money(pico_ + o.pico_); }
    constexpr Money operator-(Money o) const { return Money(pico_ - o.pico_); }
    constexpr Money operator*(std::int64_t k) const { return Money(pico_ * k); }
    Money& operator+=(Money o) {
        pico_ += o.pico_;
        return *this;
    }
    Money& operator-=(Money o) {
        pico_ -= o.pico_;
        return *this;
    }
    constexpr auto operator<=>(const Money&) const = default;

private:
    constexpr explicit Money(std::int64_t pico) : pico_(pico) {}
    std::int64_t pico_ = 0;
};

// Unit prices in micro-USD per one million tokens (2.5 USD/1M -> 2'500'000).
struct PriceTable {
    std::int64_t input_micro_usd_per_million = 0;
    std::int64_t output_micro_usd_per_million = 0;

    static PriceTable from_usd_per_million(double input, double output);

    Money cost(std::uint64_t input_tokens, std::uint64_t output_tokens) const {
        return Money::from_pico(static_cast<std::int64_t>(input_tokens) * input_micro_usd_per_million +
                                static_cast<std::int64_t>(output_tokens) * output_micro_usd_per_million);
    }

    bool operator==(const PriceTable&) const = default;
};

struct CostRecord {
    std::string agent_role;
    std::uint64_t input_tokens = 0;
    std::uint64_t output_tokens = 0;
    PriceTable prices;
    Money cost;
};

// A spending limit for one unit of work (one artifact, one persona). Scopes
// are checked in addition to the ledger-wide cap.
class BudgetScope {
public:
    explicit BudgetScope(std::optional<Money> cap = std::nullopt) : cap_(cap) {}

    std::optional<Money> cap() const { return cap_; }
    Money spent() const {
        std::lock_guard lock(mu_);
        return spent_;
    }
    std::uint64_t calls() const {
        std::lock_guard lock(mu_);
        return calls_;
    }

private:
    friend class CostLedger;
    std::optional<Money> cap_;
    mutable std::mutex mu_;
    Money spent_;
    Money reserved_;
    std::uint64_t calls_ = 0;
};

// Thread-safe record of every provider call. The running total always equals
// the sum of the record costs.
class CostLedger {
public:
    explicit CostLedger(std::optional<Money> cap = std::nullopt) : cap_(cap) {}

    CostLedger(const CostLedger&) = delete;
    CostLedger& operator=(const CostLedger&) = delete;

    struct Reservation {
        Money amount;
        BudgetScope* scope = nullptr;
    };

    // Reserves the worst-case cost of an upcoming call. Throws
    // Error(kBudgetExceeded) if committed + in-flight reservations + amount
    // would pass the ledger cap or the scope cap.
    Reservation reserve(Money amount, BudgetScope* scope);

    // Replaces a reservation with the call's actual cost.
    void commit(const Reservation& reservation, CostRecord record);

    // Drops a reservation for a call that produced no billable response.
    void release(const Reservation& reservation);

    // Records a cost without a prior reservation (no cap check).
    void record(CostRecord record, BudgetScope* scope = nullptr);

    Money total() const;
    std::optional<Money> cap() const { return cap_; }
    std::vector<CostRecord> records() const;
    std::size_t call_count() const;
    std::map<std::string, std::size_t> calls_by_role() const;
    std::uint64_t input_tokens() const;
    std::uint64_t output_tokens() const;

private:
    std::optional<Money> cap_;
    mutable std::mutex mu_;
    std::vector<CostRecord> records_;
    Money total_;
    Money reserved_;
};

}  // namespace tracegen
