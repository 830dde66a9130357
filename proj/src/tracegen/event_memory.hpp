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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tracegen/events.hpp"
#include "tracegen/minhash.hpp"
#include "tracegen/persona.hpp"

namespace tracegen {

class Gateway;
class BudgetScope;
class Diagnostics;

inline constexpr int kMemoryFormatVersion = 1;

// Deduplicated pool of seed events with parallel MinHash signatures, an LSH
// index, and embeddings. Immutable once built; safe for concurrent queries.
class EventMemory {
public:
    EventMemory() : lsh_(MinHashParams{}.bands, MinHashParams{}.rows) {}

    // Indexes `events` as given (no dedup). Throws kEmptyTokenSet for an event
    // without word tokens, kInvalidArgument when the lists differ in length.
    EventMemory(std::vector<SeedEvent> events, std::vector<std::vector<double>> embeddings,
                const MinHashParams& params = {});

    const std::vector<SeedEvent>& events() const { return events_; }
    const std::vector<MinHashSignature>& signatures() const { return signatures_; }
    const std::vector<std::vector<double>>& embeddings() const { return embeddings_; }
    const LshIndex& lsh() const { return lsh_; }
    const MinHashParams& params() const { return params_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    // Writes `path` (JSONL, one SeedEvent per line) and index_path(path).
    void save(const std::filesystem::path& path) const;

    // Throws kIoError, kParseError, kSchemaViolation, kVersionMismatch.
    static EventMemory load(const std::filesystem::path& path);

    static std::filesystem::path index_path(const std::filesystem::path& path);

private:
    std::vector<SeedEvent> events_;
    std::vector<MinHashSignature> signatures_;
    std::vector<std::vector<double>> embeddings_;
    MinHashParams params_;
    LshIndex lsh_;
};

struct MemoryOptions {
    MinHashParams minhash;
    double dedup_threshold = 0.8;
};

struct MemoryBuildReport {
    std::size_t descriptions = 0;
    std::size_t failed_descriptions = 0;
    std::size_t parsed_events = 0;
    std::size_t skipped_events = 0;  // invalid entries and token-less texts
    std::size_t duplicates_removed = 0;
    std::vector<std::string> warnings;
};

struct MemoryBuildResult {
    EventMemory memory;
    MemoryBuildReport report;
};

// Brainstorms `per_persona` seed events per description, pools them, drops
// near-duplicates, and indexes the rest. A description whose call fails is
// reported and skipped; kBudgetExceeded still propagates.
MemoryBuildResult build_memory(Gateway& gateway, const std::vector<std::string>& descriptions, std::size_t per_persona,
                               const MemoryOptions& options = {});

// Runs the seed-events prompt and returns its valid entries. Entries failing
// the SeedEvent schema are skipped, each with a warning in `warnings`.
std::vector<SeedEvent> request_seed_events(Gateway& gateway, const std::string& persona, std::size_t count,
                                           std::vector<std::string>* warnings = nullptr, BudgetScope* scope = nullptr);

struct SeedBundle {
    std::vector<SeedEvent> similar;
    std::vector<SeedEvent> uniform;
    std::vector<SeedEvent> generated;

    // similar, then uniform, then generated.
    std::vector<SeedEvent> all() const;
    std::size_t size() const { return similar.size() + uniform.size() + generated.size(); }
};

struct RetrievalOptions {
    std::size_t similar = 30;
    std::size_t uniform = 30;
    std::size_t generated = 40;
};

// The persona-side text embedded for similarity search: occupation and the
// routine narratives, newline-separated.
std::string query_digest(const PersonaProfile& profile);

// Indices of the `k` memory entries most cosine-similar to `query`, ties to
// the lower index.
std::vector<std::size_t> top_k_similar(const EventMemory& memory, const std::vector<double>& query, std::size_t k);

// Similar by embedding search, uniform by seeded sampling of the rest,
// generated by prompting with the profile. Throws kInvalidArgument on an
// empty memory, and kGenerationFailed when the model cannot supply the
// requested number of generated events.
SeedBundle retrieve_seeds(Gateway& gateway, const PersonaProfile& profile, const EventMemory& memory,
                          std::uint64_t seed, const RetrievalOptions& options = {}, BudgetScope* scope = nullptr);

}  // namespace tracegen
