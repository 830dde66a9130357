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

#include "tracegen/demographics.hpp"

#include <cmath>
#include <sstream>

#include "tracegen/error.hpp"
#include "tracegen/random.hpp"

namespace tracegen {

DemographicPrior::DemographicPrior(std::vector<Marginal> marginals) : marginals_(std::move(marginals)) {
    for (const auto& m : marginals_) {
        if (m.categories.empty()) {
            throw Error(ErrorCode::kEmptyMarginal, "marginal \"" + m.attribute + "\" has no categories");
        }
        if (m.categories.size() != m.probabilities.size()) {
            throw Error(ErrorCode::kParseError, "marginal \"" + m.attribute + "\" is ragged");
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < m.probabilities.size(); ++i) {
            const double p = m.probabilities[i];
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw Error(ErrorCode::kNormalizationError, "marginal \"" + m.attribute + "\" has invalid probability for \"" +
                                                                m.categories[i] + "\"");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            std::ostringstream ss;
            ss.precision(10);
            ss << "marginal \"" << m.attribute << "\" sums to " << sum;
            throw Error(ErrorCode::kNormalizationError, ss.str());
        }
    }
}

const Marginal* DemographicPrior::find(std::string_view attribute) const {
    for (const auto& m : marginals_) {
        if (m.attribute == attribute) return &m;
    }
    return nullptr;
}

DemographicPrior DemographicPrior::from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("marginals") || !doc["marginals"].is_object()) {
        throw Error(ErrorCode::kParseError, "prior must be an object with a \"marginals\" object");
    }
    std::vector<Marginal> marginals;
    for (const auto& [attribute, entries] : doc["marginals"].items()) {
        if (!entries.is_array()) {
            throw Error(ErrorCode::kParseError, "marginal \"" + attribute + "\" must be a list of [label, probability]");
        }
        Marginal m{attribute, {}, {}};
        for (const auto& pair : entries) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number()) {
                throw Error(ErrorCode::kParseError, "marginal \"" + attribute + "\" entry must be [label, probability]");
            }
            m.categories.push_back(pair[0].get<std::string>());
            m.probabilities.push_back(pair[1].get<double>());
        }
        marginals.push_back(std::move(m));
    }
    return DemographicPrior(std::move(marginals));
}

DemographicPrior load_prior(const std::filesystem::path& path) {
    const auto contents = read_file(path);
    Json doc = Json::parse(contents, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw Error(ErrorCode::kParseError, path.string() + " is not valid JSON");
    return DemographicPrior::from_json(doc);
}

std::optional<std::string> DemographicDraw::get(std::string_view attribute) const {
    for (const auto& [k, v] : attributes) {
        if (k == attribute) return v;
    }
    return std::nullopt;
}

Json DemographicDraw::to_json() const {
    Json out = Json::object();
    for (const auto& [k, v] : attributes) out[k] = v;
    return out;
}

DemographicDraw sample_draw(const DemographicPrior& prior, std::uint64_t seed) {
    Rng rng(seed);
    DemographicDraw draw;
    draw.rng_seed = seed;
    for (const auto& m : prior.marginals()) {
        const auto i = rng.categorical(m.probabilities);
        draw.attributes.emplace_back(m.attribute, m.categories[i]);
    }
    return draw;
}

}  // namespace tracegen
