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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracegen/json.hpp"

namespace tracegen {

// One categorical attribute of the prior, e.g. "age" over brackets.
struct Marginal {
    std::string attribute;
    std::vector<std::string> categories;
    std::vector<double> probabilities;
};

// Independent categorical marginals, in file order. Immutable after load.
//
// File format: {"marginals": {"age": [["18-24", 0.12], ...], ...}}
class DemographicPrior {
public:
    // Throws kNormalizationError (|sum - 1| > 1e-9 or a negative entry) or
    // kEmptyMarginal, naming the offending marginal.
    explicit DemographicPrior(std::vector<Marginal> marginals);

    static DemographicPrior from_json(const Json& doc);

    const std::vector<Marginal>& marginals() const { return marginals_; }
    const Marginal* find(std::string_view attribute) const;

private:
    std::vector<Marginal> marginals_;
};

// Throws kIoError, kParseError, kNormalizationError, kEmptyMarginal.
DemographicPrior load_prior(const std::filesystem::path& path);

// One category per marginal, in prior order.
struct DemographicDraw {
    std::vector<std::pair<std::string, std::string>> attributes;
    std::uint64_t rng_seed = 0;

    std::optional<std::string> get(std::string_view attribute) const;

    // {"age": "25-34", ...}, the persona prompt's input object.
    Json to_json() const;

    bool operator==(const DemographicDraw&) const = default;
};

// Samples every marginal independently with a PRNG seeded by `seed`.
DemographicDraw sample_draw(const DemographicPrior& prior, std::uint64_t seed);

}  // namespace tracegen
