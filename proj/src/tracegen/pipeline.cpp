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

#include "tracegen/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "tracegen/ablation.hpp"
#include "tracegen/artifact_engine.hpp"
#include "tracegen/builtin_data.hpp"
#include "tracegen/demographics.hpp"
#include "tracegen/error.hpp"
#include "tracegen/event_forest.hpp"
#include "tracegen/footprint.hpp"
#include "tracegen/hashing.hpp"
#include "tracegen/metrics.hpp"
#include "tracegen/persona.hpp"
#include "tracegen/random.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::kConfigError, message); }

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    try {
        return j[key].get<T>();
    } catch (const Json::exception&) {
        bad(std::string("run config: \"") + key + "\" has the wrong type");
    }
}

std::optional<std::filesystem::path> path_or(const Json& j, const char* key, const std::filesystem::path& base) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    std::filesystem::path p = get_or<std::string>(j, key, "");
    if (p.empty()) bad(std::string("run config: \"") + key + "\" is empty");
    return p.is_absolute() || base.empty() ? p : base / p;
}

std::string persona_dir_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "persona-%03zu", index);
    return buf;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

DemographicPrior load_run_prior(const RunConfig& config) {
    try {
        if (config.prior) return load_prior(*config.prior);
        return DemographicPrior::from_json(Json::parse(builtin::prior_json()));
    } catch (const Error& e) {
        throw Error(ErrorCode::kConfigError, std::string("prior: ") + e.what(), e.details());
    }
}

struct PersonaOutcome {
    std::string dir;
    std::size_t artifacts = 0;
};

PersonaOutcome run_persona(Gateway& gateway, const RunConfig& config, const DemographicPrior& prior,
                           const EventMemory& memory, std::size_t index, const std::string& config_hash) {
    const auto persona_id = persona_dir_name(index);
    const auto persona_seed = derive_seed(config.seed, static_cast<std::uint64_t>(index));
    std::vector<std::string> warnings;

    const auto draw = sample_draw(prior, persona_seed);
    auto profile = generate_profile(gateway, draw);
    const auto bundle = retrieve_seeds(gateway, profile, memory, persona_seed, config.retrieval);
    auto built = build_forest(gateway, bundle, profile, ForestOptions{config.forest_cap});
    warnings.insert(warnings.end(), built.warnings.begin(), built.warnings.end());

    std::vector<Artifact> artifacts;
    std::size_t approved = 0;
    const RefineOptions refine_options{config.max_cycles};
    for (std::size_t id = 0; id < built.forest.node_count(); ++id) {
        BudgetScope scope(Money::from_usd(config.artifact_budget_usd));
        try {
            auto refined =
                refine(gateway, built.forest.nodes[id].payload, id, profile, refine_options, &warnings, &scope);
            if (refined.approved) ++approved;
            artifacts.push_back(std::move(refined.artifact));
        } catch (const Error& e) {
            const bool scope_budget = e.code() == ErrorCode::kBudgetExceeded && e.details() == std::vector<std::string>{"scope"};
            if (!scope_budget && e.code() != ErrorCode::kOutlineFailed && e.code() != ErrorCode::kGenerationFailed) throw;
            warnings.push_back("event " + std::to_string(id) + " has no artifact: " + e.what());
        }
    }

    Provenance provenance{config.seed, gateway.provider().id(), config_hash};
    auto footprint = assemble(persona_id, std::move(profile), std::move(built.forest), std::move(artifacts), provenance);

    const auto dir = config.out / persona_id;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / "profile.json", pretty(footprint.profile.to_json()));
    write_file(dir / "forest.json", pretty(footprint.forest.to_json()));
    write_file(dir / "trace.json", pretty(trace_to_json(built.trace)));
    export_jsonl(footprint, dir / "footprint.jsonl");
    const auto calendar_entries = export_ics(footprint, dir / "calendar.ics");

    Json prov = provenance.to_json();
    prov["persona_id"] = persona_id;
    prov["persona_index"] = index;
    prov["persona_seed"] = persona_seed;
    prov["draw"] = draw.to_json();
    prov["seed_events"] = Json{{"similar", bundle.similar.size()},
                               {"uniform", bundle.uniform.size()},
                               {"generated", bundle.generated.size()}};
    prov["forest_nodes"] = footprint.forest.node_count();
    prov["artifacts"] = footprint.artifacts.size();
    prov["approved_artifacts"] = approved;
    prov["calendar_entries"] = calendar_entries;
    prov["warnings"] = warnings.size();
    write_file(dir / "provenance.json", pretty(prov));
    write_file(dir / "warnings.txt", warnings.empty() ? std::string() : text::join(warnings, "\n") + "\n");
    return PersonaOutcome{dir.string(), footprint.artifacts.size()};
}

EventMemory obtain_memory(Gateway& gateway, const RunConfig& config) {
    if (config.memory) return EventMemory::load(*config.memory);
    auto built = build_memory(gateway, load_descriptions(config.descriptions), config.events_per_description);
    return std::move(built.memory);
}

}  // namespace

RunConfig RunConfig::from_json(const Json& j, const std::filesystem::path& base) {
    if (!j.is_object()) bad("run config must be a JSON object");
    static const std::set<std::string> kKnown = {
        "provider",    "provider_config", "prior",          "descriptions",        "memory",
        "events_per_description", "personas", "seed",        "forest_cap",          "allow_large_forest",
        "max_cycles",  "retrieval",       "out",            "budget_cap_usd",      "artifact_budget_usd",
        "workers",     "evaluation"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!kKnown.count(it.key())) bad("run config: unknown key \"" + it.key() + "\"");
    }
    RunConfig c;
    if (j.contains("provider") && j.contains("provider_config")) bad("run config: give \"provider\" or \"provider_config\", not both");
    if (j.contains("provider")) {
        c.provider = ProviderConfig::from_json(j["provider"]);
    } else if (auto p = path_or(j, "provider_config", base)) {
        c.provider = ProviderConfig::load(*p);
    }
    c.prior = path_or(j, "prior", base);
    c.descriptions = path_or(j, "descriptions", base);
    c.memory = path_or(j, "memory", base);
    c.events_per_description = get_or<std::size_t>(j, "events_per_description", c.events_per_description);
    c.personas = get_or<std::size_t>(j, "personas", c.personas);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
    c.forest_cap = get_or<std::size_t>(j, "forest_cap", c.forest_cap);
    c.allow_large_forest = get_or<bool>(j, "allow_large_forest", false);
    c.max_cycles = get_or<std::size_t>(j, "max_cycles", c.max_cycles);
    if (j.contains("retrieval")) {
        const auto& r = j["retrieval"];
        if (!r.is_object()) bad("run config: retrieval must be an object");
        c.retrieval.similar = get_or<std::size_t>(r, "similar", c.retrieval.similar);
        c.retrieval.uniform = get_or<std::size_t>(r, "uniform", c.retrieval.uniform);
        c.retrieval.generated = get_or<std::size_t>(r, "generated", c.retrieval.generated);
    }
    if (auto out = path_or(j, "out", base)) c.out = *out;
    if (j.contains("budget_cap_usd") && !j["budget_cap_usd"].is_null()) {
        c.budget_cap_usd = get_or<double>(j, "budget_cap_usd", 0.0);
    }
    c.artifact_budget_usd = get_or<double>(j, "artifact_budget_usd", c.artifact_budget_usd);
    c.workers = get_or<std::size_t>(j, "workers", c.workers);
    if (j.contains("evaluation")) {
        const auto& e = j["evaluation"];
        if (!e.is_object()) bad("run config: evaluation must be an object");
        c.eval_threshold = get_or<std::size_t>(e, "threshold", c.eval_threshold);
        c.eval_repeats = get_or<std::size_t>(e, "repeats", c.eval_repeats);
        c.judge_samples = get_or<std::size_t>(e, "judge_samples", c.judge_samples);
        c.ablated_baseline = get_or<std::size_t>(e, "ablated", c.ablated_baseline);
    }
    return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::string raw;
    try {
        raw = read_file(path);
    } catch (const Error& e) {
        bad(e.what());
    }
    auto j = Json::parse(raw, nullptr, false, true);
    if (j.is_discarded()) bad(path.string() + " is not valid JSON");
    return from_json(j, path.parent_path());
}

void RunConfig::validate() const {
    if (personas == 0) bad("personas must be positive");
    if (forest_cap == 0) bad("forest_cap must be positive");
    if (forest_cap > kDefaultForestCap && !allow_large_forest) {
        bad("forest_cap above 300 needs \"allow_large_forest\": true");
    }
    if (max_cycles < 1 || max_cycles > kMaxCyclesCeiling) bad("max_cycles must be in 1..5");
    if (events_per_description == 0) bad("events_per_description must be positive");
    if (retrieval.similar + retrieval.uniform + retrieval.generated == 0) bad("retrieval counts are all zero");
    if (budget_cap_usd && *budget_cap_usd < 0) bad("budget_cap_usd must be >= 0");
    if (!(artifact_budget_usd > 0)) bad("artifact_budget_usd must be positive");
    if (eval_threshold < 2 || eval_repeats == 0) bad("evaluation threshold must be >= 2 and repeats >= 1");
}

void RunConfig::force_offline() {
    provider.kind = ProviderKind::kMock;
    provider.endpoint.clear();
    provider.api_key_env.clear();
    provider.model.clear();
    provider.embedding_model.clear();
    provider.embedding_dim = 0;
}

Money RunConfig::effective_budget_cap() const {
    if (budget_cap_usd) return Money::from_usd(*budget_cap_usd);
    if (provider.budget_cap_usd) return Money::from_usd(*provider.budget_cap_usd);
    return Money::from_usd(kArtifactBudgetUsd) * static_cast<std::int64_t>(personas * forest_cap);
}

Json RunConfig::canonical_json() const {
    auto opt_path = [](const std::optional<std::filesystem::path>& p) {
        return p ? Json(sha256_hex(read_file(*p))) : Json("builtin");
    };
    return Json{{"provider", provider.to_json()},
                {"prior_sha256", opt_path(prior)},
                {"descriptions_sha256", memory ? Json(nullptr) : opt_path(descriptions)},
                {"memory_sha256", memory ? Json(sha256_hex(read_file(*memory))) : Json(nullptr)},
                {"events_per_description", events_per_description},
                {"personas", personas},
                {"seed", seed},
                {"forest_cap", forest_cap},
                {"max_cycles", max_cycles},
                {"retrieval",
                 Json{{"similar", retrieval.similar}, {"uniform", retrieval.uniform}, {"generated", retrieval.generated}}},
                {"budget_cap_pico_usd", effective_budget_cap().pico()},
                {"artifact_budget_pico_usd", Money::from_usd(artifact_budget_usd).pico()}};
}

std::string RunConfig::config_hash() const { return sha256_hex(canonical_json().dump()); }

Json GenerateReport::to_json() const {
    Json failed = Json::array();
    for (const auto& f : failures) {
        failed.push_back(Json{{"index", f.index}, {"code", to_string(f.code)}, {"message", f.message}});
    }
    return Json{{"requested", requested},
                {"succeeded", persona_dirs.size()},
                {"persona_dirs", persona_dirs},
                {"failures", std::move(failed)},
                {"artifacts", artifacts},
                {"memory_events", memory_events},
                {"calls", calls},
                {"cost_usd", cost.usd()},
                {"config_hash", config_hash}};
}

std::vector<std::string> load_descriptions(const std::optional<std::filesystem::path>& path) {
    std::istringstream in(path ? read_file(*path) : std::string(builtin::persona_descriptions()));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = text::trim(line);
        if (!t.empty()) out.emplace_back(t);
    }
    if (out.empty()) throw Error(ErrorCode::kConfigError, "no persona descriptions");
    return out;
}

GenerateReport cmd_generate(const RunConfig& config) {
    config.validate();
    const auto prior = load_run_prior(config);
    const auto hash = config.config_hash();
    auto gateway = make_gateway(config.provider, config.effective_budget_cap());

    GenerateReport report;
    report.requested = config.personas;
    report.config_hash = hash;
    const auto memory = obtain_memory(*gateway, config);
    report.memory_events = memory.size();

    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    if (ec) throw Error(ErrorCode::kIoError, "cannot create " + config.out.string() + ": " + ec.message());

    std::vector<std::optional<PersonaOutcome>> outcomes(config.personas);
    std::vector<std::optional<PersonaFailure>> failures(config.personas);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.personas; i = next++) {
            try {
                outcomes[i] = run_persona(*gateway, config, prior, memory, i, hash);
            } catch (const Error& e) {
                failures[i] = PersonaFailure{i, e.code(), e.what()};
            } catch (const std::exception& e) {
                failures[i] = PersonaFailure{i, ErrorCode::kInternal, e.what()};
            }
        }
    };
    const auto workers = std::max<std::size_t>(
        1, std::min(config.personas, config.workers ? config.workers : config.provider.max_concurrency));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < config.personas; ++i) {
        if (outcomes[i]) {
            report.persona_dirs.push_back(outcomes[i]->dir);
            report.artifacts += outcomes[i]->artifacts;
        }
        if (failures[i]) report.failures.push_back(*failures[i]);
    }
    report.calls = gateway->ledger().call_count();
    report.cost = gateway->ledger().total();
    Json run = report.to_json();
    // Directory names relative to the output root keep run.json relocatable.
    run["persona_dirs"] = Json::array();
    for (std::size_t i = 0; i < config.personas; ++i) {
        if (outcomes[i]) run["persona_dirs"].push_back(persona_dir_name(i));
    }
    write_file(config.out / "run.json", pretty(run));
    return report;
}

BuildMemoryOutcome cmd_build_memory(const RunConfig& config, const std::optional<std::filesystem::path>& descriptions,
                                   const std::filesystem::path& out_path) {
    auto gateway = make_gateway(config.provider, config.budget_cap_usd
                                                     ? std::optional<Money>(Money::from_usd(*config.budget_cap_usd))
                                                     : std::nullopt);
    auto built = build_memory(*gateway, load_descriptions(descriptions ? descriptions : config.descriptions),
                              config.events_per_description);
    if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
    built.memory.save(out_path);
    return BuildMemoryOutcome{std::move(built.report), built.memory.size()};
}

EvaluateResult cmd_evaluate(const RunConfig& config, const std::vector<std::filesystem::path>& corpora,
                            const std::filesystem::path& out_dir) {
    if (corpora.empty() && config.ablated_baseline == 0) {
        throw Error(ErrorCode::kConfigError, "evaluate needs at least one corpus");
    }
    if (config.ablated_baseline == 1) bad("the ablated baseline needs at least two documents");
    std::vector<std::vector<std::string>> documents;
    std::vector<std::string> names;
    for (const auto& path : corpora) {
        names.push_back(path.string());
        try {
            documents.push_back(load_corpus(path));
        } catch (const Error& e) {
            throw Error(ErrorCode::kConfigError, std::string("corpus ") + e.what());
        }
        if (documents.back().size() < 2) {
            throw Error(ErrorCode::kConfigError, "corpus " + path.string() + " needs at least two documents");
        }
    }

    auto gateway = make_gateway(config.provider, config.budget_cap_usd
                                                     ? std::optional<Money>(Money::from_usd(*config.budget_cap_usd))
                                                     : std::nullopt);
    const SubsampleOptions options{config.eval_threshold, config.eval_repeats, config.seed};
    const Embedder embed = [&](std::string_view text) { return gateway->embed(text).values; };
    if (config.ablated_baseline > 0) {
        const auto profile = generate_profile(*gateway, sample_draw(load_run_prior(config), config.seed));
        std::vector<std::string> docs;
        for (const auto& a : generate_ablated(profile, config.ablated_baseline, config.seed)) {
            docs.push_back(document_text(a));
        }
        documents.push_back(std::move(docs));
        names.push_back("ablated-baseline");
    }
    std::vector<ReportRow> rows;
    for (std::size_t c = 0; c < documents.size(); ++c) {
        ReportRow row{names[c], subsampled_eval(documents[c], embed, options), std::nullopt};
        if (config.judge_samples > 0) {
            std::vector<JudgeScores> scores;
            const auto n = std::min(config.judge_samples, documents[c].size());
            for (std::size_t i = 0; i < n; ++i) scores.push_back(llm_judge(*gateway, documents[c][i]));
            row.judge = mean_scores(scores);
        }
        rows.push_back(std::move(row));
    }
    EvaluateResult result{metrics_report(rows, options), render_table(rows)};
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file(out_dir / "report.json", pretty(result.report));
        write_file(out_dir / "report.txt", result.table);
    }
    return result;
}

}  // namespace tracegen
