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
#include <optional>
#include <string>
#include <vector>

#include "tracegen/event_memory.hpp"
#include "tracegen/json.hpp"
#include "tracegen/provider_config.hpp"

namespace tracegen {

inline constexpr double kArtifactBudgetUsd = 0.57;

// Run configuration. Relative paths in a config file resolve against the
// file's directory. Unset prior/descriptions fall back to the compiled-in
// defaults.
struct RunConfig {
    ProviderConfig provider;
    std::optional<std::filesystem::path> prior;
    std::optional<std::filesystem::path> descriptions;
    std::optional<std::filesystem::path> memory;  // prebuilt memory; built from descriptions otherwise
    std::size_t events_per_description = 20;
    std::size_t personas = 1;
    std::uint64_t seed = 0;
    std::size_t forest_cap = 300;
    bool allow_large_forest = false;  // acknowledges forest_cap > 300
    std::size_t max_cycles = 3;
    RetrievalOptions retrieval;
    std::filesystem::path out = "out";
    std::optional<double> budget_cap_usd;  // default: 0.57 * personas * forest_cap
    double artifact_budget_usd = kArtifactBudgetUsd;
    std::size_t workers = 0;  // 0: min(personas, provider max_concurrency)
    std::size_t eval_threshold = 1000;
    std::size_t eval_repeats = 5;
    std::size_t judge_samples = 0;
    std::size_t ablated_baseline = 0;  // > 0 adds a template-baseline row of this many emails

    // Throws kConfigError.
    static RunConfig from_json(const Json& j, const std::filesystem::path& base_dir = {});
    static RunConfig load(const std::filesystem::path& path);

    // Throws kConfigError on non-positive counts, an unacknowledged forest
    // cap above 300, or max_cycles outside 1..5.
    void validate() const;

    // Forces the mock backend, keeping its mock options and prices.
    void force_offline();

    // Global cap in effect for cmd_generate.
    Money effective_budget_cap() const;

    // Canonical JSON of everything that influences generated content; the
    // output directory is excluded so relocated reruns hash equal.
    Json canonical_json() const;
    std::string config_hash() const;
};

struct PersonaFailure {
    std::size_t index = 0;
    ErrorCode code = ErrorCode::kInternal;
    std::string message;
};

struct GenerateReport {
    std::size_t requested = 0;
    std::vector<std::string> persona_dirs;  // successful personas, in index order
    std::vector<PersonaFailure> failures;
    std::size_t artifacts = 0;
    std::size_t memory_events = 0;
    std::size_t calls = 0;
    Money cost;
    std::string config_hash;

    Json to_json() const;
};

// For each persona: draw, profile, seed retrieval, forest, artifacts, and the
// footprint files under config.out/persona-NNN/. Failed personas are reported,
// not thrown; only config and setup errors throw.
GenerateReport cmd_generate(const RunConfig& config);

// Builds the event memory from a descriptions file (or the defaults) and
// saves it to out_path plus its index file.
struct BuildMemoryOutcome {
    MemoryBuildReport report;
    std::size_t events = 0;  // entries saved
};

BuildMemoryOutcome cmd_build_memory(const RunConfig& config, const std::optional<std::filesystem::path>& descriptions,
                                   const std::filesystem::path& out_path);

struct EvaluateResult {
    Json report;
    std::string table;
};

// One metrics row per corpus, input order preserved, then an "ablated-baseline"
// row when config.ablated_baseline > 0 (template emails for a profile drawn
// with config.seed). Writes report.json and report.txt into `out_dir` when it
// is non-empty. Throws kConfigError for an unreadable corpus or one with fewer
// than two documents.
EvaluateResult cmd_evaluate(const RunConfig& config, const std::vector<std::filesystem::path>& corpora,
                            const std::filesystem::path& out_dir);

std::vector<std::string> load_descriptions(const std::optional<std::filesystem::path>& path);

}  // namespace tracegen
