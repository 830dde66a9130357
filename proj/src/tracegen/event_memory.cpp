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

#include "tracegen/event_memory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tracegen/error.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"
#include "tracegen/random.hpp"

namespace tracegen {
namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

EventMemory::EventMemory(std::vector<SeedEvent> events, std::vector<std::vector<double>> embeddings,
                         const MinHashParams& params)
    : events_(std::move(events)), embeddings_(std::move(embeddings)), params_(params), lsh_(params.bands, params.rows) {
    params_.validate();
    if (events_.size() != embeddings_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "events and embeddings differ in length");
    }
    signatures_.reserve(events_.size());
    for (std::size_t i = 0; i < events_.size(); ++i) {
        signatures_.push_back(minhash_signature(events_[i].text(), params_));
        lsh_.insert(i, signatures_.back());
    }
}

std::filesystem::path EventMemory::index_path(const std::filesystem::path& path) {
    auto p = path;
    p += ".index.json";
    return p;
}

void EventMemory::save(const std::filesystem::path& path) const {
    std::string lines;
    for (const auto& e : events_) lines += e.to_json().dump() + "\n";
    write_file(path, lines);

    Json index;
    index["format_version"] = kMemoryFormatVersion;
    index["count"] = events_.size();
    index["k"] = params_.k;
    index["bands"] = params_.bands;
    index["rows"] = params_.rows;
    index["seed"] = params_.seed;
    index["char_ngram"] = params_.char_ngram;
    index["embeddings"] = embeddings_;
    Json sigs = Json::array();
    for (const auto& s : signatures_) sigs.push_back(s.minima);
    index["signatures"] = std::move(sigs);
    write_file(index_path(path), index.dump() + "\n");
}

EventMemory EventMemory::load(const std::filesystem::path& path) {
    std::vector<SeedEvent> events;
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw Error(ErrorCode::kParseError, path.string() + ":" + std::to_string(line_no) + " is not valid JSON");
        }
        events.push_back(SeedEvent::from_json(j));
    }

    const auto index_file = index_path(path);
    auto index = Json::parse(read_file(index_file), nullptr, false);
    if (index.is_discarded() || !index.is_object()) {
        throw Error(ErrorCode::kParseError, index_file.string() + " is not valid JSON");
    }
    if (!index.contains("format_version") || index["format_version"] != kMemoryFormatVersion) {
        throw Error(ErrorCode::kVersionMismatch, index_file.string() + ": unsupported format_version " +
                                                     index.value("format_version", Json()).dump());
    }
    MinHashParams params;
    std::vector<std::vector<double>> embeddings;
    std::vector<std::vector<std::uint64_t>> stored;
    try {
        params.k = index.at("k").get<std::size_t>();
        params.bands = index.at("bands").get<std::size_t>();
        params.rows = index.at("rows").get<std::size_t>();
        params.seed = index.at("seed").get<std::uint64_t>();
        params.char_ngram = index.value("char_ngram", std::size_t{0});
        embeddings = index.at("embeddings").get<std::vector<std::vector<double>>>();
        stored = index.at("signatures").get<std::vector<std::vector<std::uint64_t>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParseError, index_file.string() + ": " + e.what());
    }
    if (embeddings.size() != events.size() || stored.size() != events.size()) {
        throw Error(ErrorCode::kVersionMismatch, index_file.string() + " does not match " + path.string());
    }
    EventMemory memory(std::move(events), std::move(embeddings), params);
    for (std::size_t i = 0; i < stored.size(); ++i) {
        if (stored[i] != memory.signatures_[i].minima) {
            throw Error(ErrorCode::kVersionMismatch,
                        index_file.string() + ": signature " + std::to_string(i) + " was built by a different hasher");
        }
    }
    return memory;
}

std::vector<SeedEvent> request_seed_events(Gateway& gateway, const std::string& persona, std::size_t count,
                                           std::vector<std::string>* warnings, BudgetScope* scope) {
    const auto list = gateway.complete_json(prompts::seed_events(persona, count), SchemaId::kSeedEventList, {}, scope);
    std::vector<SeedEvent> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        try {
            out.push_back(SeedEvent::from_json(list[i]));
        } catch (const Error& e) {
            if (warnings) {
                std::string detail = e.details().empty() ? e.what() : e.details().front();
                warnings->push_back("seed event " + std::to_string(i) + " skipped: " + detail);
            }
        }
    }
    return out;
}

MemoryBuildResult build_memory(Gateway& gateway, const std::vector<std::string>& descriptions, std::size_t per_persona,
                               const MemoryOptions& options) {
    if (per_persona == 0) throw Error(ErrorCode::kInvalidArgument, "per_persona must be positive");
    options.minhash.validate();
    MemoryBuildReport report;
    report.descriptions = descriptions.size();

    std::vector<SeedEvent> pooled;
    for (std::size_t d = 0; d < descriptions.size(); ++d) {
        try {
            std::vector<std::string> warnings;
            auto events = request_seed_events(gateway, descriptions[d], per_persona, &warnings);
            report.skipped_events += warnings.size();
            for (auto& w : warnings) report.warnings.push_back("description " + std::to_string(d) + ": " + w);
            report.parsed_events += events.size();
            pooled.insert(pooled.end(), events.begin(), events.end());
        } catch (const Error& e) {
            if (e.code() == ErrorCode::kBudgetExceeded) throw;
            ++report.failed_descriptions;
            report.warnings.push_back("description " + std::to_string(d) + " failed: " + e.what());
        }
    }

    std::vector<SeedEvent> signable;
    std::vector<MinHashSignature> signatures;
    for (auto& e : pooled) {
        const auto set = shingles(e.text(), options.minhash.char_ngram);
        if (set.empty()) {
            ++report.skipped_events;
            report.warnings.push_back("event \"" + e.event + "\" has no word tokens; skipped");
            continue;
        }
        signatures.push_back(minhash_signature(set, options.minhash.k, options.minhash.seed));
        signable.push_back(std::move(e));
    }
    const auto kept = dedup_signatures(signatures, options.dedup_threshold, options.minhash);
    report.duplicates_removed = signable.size() - kept.size();

    std::vector<SeedEvent> events;
    std::vector<std::vector<double>> embeddings;
    for (const auto i : kept) {
        embeddings.push_back(gateway.embed(signable[i].text()).values);
        events.push_back(std::move(signable[i]));
    }
    for (const auto& w : report.warnings) gateway.diagnostics().warn(w);
    return MemoryBuildResult{EventMemory(std::move(events), std::move(embeddings), options.minhash), std::move(report)};
}

std::vector<SeedEvent> SeedBundle::all() const {
    std::vector<SeedEvent> out;
    out.reserve(size());
    out.insert(out.end(), similar.begin(), similar.end());
    out.insert(out.end(), uniform.begin(), uniform.end());
    out.insert(out.end(), generated.begin(), generated.end());
    return out;
}

std::string query_digest(const PersonaProfile& profile) {
    return profile.occupation + "\n" + profile.weekdays_routines + "\n" + profile.weekend_routines;
}

std::vector<std::size_t> top_k_similar(const EventMemory& memory, const std::vector<double>& query, std::size_t k) {
    const auto& embeddings = memory.embeddings();
    std::vector<double> scores(embeddings.size());
    for (std::size_t i = 0; i < embeddings.size(); ++i) scores[i] = cosine(query, embeddings[i]);
    std::vector<std::size_t> order(embeddings.size());
    std::iota(order.begin(), order.end(), 0);
    k = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) { return scores[a] > scores[b] || (scores[a] == scores[b] && a < b); });
    order.resize(k);
    return order;
}

SeedBundle retrieve_seeds(Gateway& gateway, const PersonaProfile& profile, const EventMemory& memory,
                          std::uint64_t seed, const RetrievalOptions& options, BudgetScope* scope) {
    if (memory.empty()) throw Error(ErrorCode::kInvalidArgument, "event memory is empty");
    SeedBundle bundle;

    const auto query = gateway.embed(query_digest(profile));
    const auto similar = top_k_similar(memory, query.values, options.similar);
    for (const auto i : similar) bundle.similar.push_back(memory.events()[i]);

    std::vector<bool> taken(memory.size(), false);
    for (const auto i : similar) taken[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < memory.size(); ++i) {
        if (!taken[i]) rest.push_back(i);
    }
    Rng rng(derive_seed(seed, "uniform"));
    auto picks = rng.sample_without_replacement(rest.size(), std::min(options.uniform, rest.size()));
    std::sort(picks.begin(), picks.end());
    for (const auto p : picks) bundle.uniform.push_back(memory.events()[rest[p]]);

    // A model may return fewer entries than asked for; top up a few times.
    const auto persona = profile.to_json().dump(2);
    std::vector<std::string> warnings;
    for (int round = 0; round < 3 && bundle.generated.size() < options.generated; ++round) {
        auto events = request_seed_events(gateway, persona, options.generated - bundle.generated.size(), &warnings, scope);
        for (auto& e : events) {
            if (bundle.generated.size() == options.generated) break;
            bundle.generated.push_back(std::move(e));
        }
    }
    for (const auto& w : warnings) gateway.diagnostics().warn(w);
    if (bundle.generated.size() < options.generated) {
        throw Error(ErrorCode::kGenerationFailed, "model supplied " + std::to_string(bundle.generated.size()) + " of " +
                                                      std::to_string(options.generated) + " generated seed events");
    }
    return bundle;
}

}  // namespace tracegen
