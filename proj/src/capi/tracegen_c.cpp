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

#include "tracegen/tracegen.h"

#include <memory>
#include <string>
#include <vector>

#include "tracegen/error.hpp"
#include "tracegen/metrics.hpp"
#include "tracegen/pipeline.hpp"
#include "tracegen/schema.hpp"

struct tracegen_config {
    tracegen::RunConfig config;
};

struct tracegen_result {
    std::string json;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

int fail(int status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const tracegen::Error& e) {
        std::string message = e.what();
        for (const auto& d : e.details()) message += "\n  " + d;
        return fail(static_cast<int>(e.code()), std::move(message));
    } catch (const std::bad_alloc&) {
        return fail(TRACEGEN_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TRACEGEN_INTERNAL, e.what());
    } catch (...) {
        return fail(TRACEGEN_INTERNAL, "unknown error");
    }
}

int emit(tracegen_result** out, std::string json, std::string text = {}) {
    *out = new tracegen_result{std::move(json), std::move(text)};
    return TRACEGEN_OK;
}

}  // namespace

extern "C" {

int tracegen_abi_version(void) { return TRACEGEN_ABI_VERSION; }

const char* tracegen_status_name(int status) {
    return tracegen::to_string(static_cast<tracegen::ErrorCode>(status));
}

const char* tracegen_last_error(void) { return g_last_error.c_str(); }

int tracegen_config_new(tracegen_config** out) {
    if (!out) return fail(TRACEGEN_INVALID_ARGUMENT, "out is NULL");
    return guarded([&]() -> int {
        *out = new tracegen_config{};
        return TRACEGEN_OK;
    });
}

int tracegen_config_load(const char* path, tracegen_config** out) {
    if (!path || !out) return fail(TRACEGEN_INVALID_ARGUMENT, "path and out are required");
    return guarded([&]() -> int {
        auto config = tracegen::RunConfig::load(path);
        *out = new tracegen_config{std::move(config)};
        return TRACEGEN_OK;
    });
}

void tracegen_config_free(tracegen_config* config) { delete config; }

int tracegen_config_set_seed(tracegen_config* config, uint64_t seed) {
    if (!config) return fail(TRACEGEN_INVALID_ARGUMENT, "config is NULL");
    config->config.seed = seed;
    return TRACEGEN_OK;
}

int tracegen_config_set_personas(tracegen_config* config, size_t personas) {
    if (!config) return fail(TRACEGEN_INVALID_ARGUMENT, "config is NULL");
    if (personas == 0) return fail(TRACEGEN_CONFIG_ERROR, "personas must be positive");
    config->config.personas = personas;
    return TRACEGEN_OK;
}

int tracegen_config_set_out(tracegen_config* config, const char* dir) {
    if (!config || !dir || !*dir) return fail(TRACEGEN_INVALID_ARGUMENT, "config and a non-empty dir are required");
    config->config.out = dir;
    return TRACEGEN_OK;
}

int tracegen_config_set_offline(tracegen_config* config) {
    if (!config) return fail(TRACEGEN_INVALID_ARGUMENT, "config is NULL");
    config->config.force_offline();
    return TRACEGEN_OK;
}

int tracegen_config_set_ablated(tracegen_config* config, size_t count) {
    if (!config) return fail(TRACEGEN_INVALID_ARGUMENT, "config is NULL");
    config->config.ablated_baseline = count;
    return TRACEGEN_OK;
}

int tracegen_config_hash(const tracegen_config* config, tracegen_result** out) {
    if (!config || !out) return fail(TRACEGEN_INVALID_ARGUMENT, "config and out are required");
    return guarded([&]() -> int { return emit(out, tracegen::Json(config->config.config_hash()).dump()); });
}

const char* tracegen_result_json(const tracegen_result* result) { return result ? result->json.c_str() : ""; }

const char* tracegen_result_text(const tracegen_result* result) { return result ? result->text.c_str() : ""; }

void tracegen_result_free(tracegen_result* result) { delete result; }

int tracegen_generate(const tracegen_config* config, tracegen_result** out) {
    if (!config || !out) return fail(TRACEGEN_INVALID_ARGUMENT, "config and out are required");
    *out = nullptr;
    return guarded([&]() -> int {
        const auto report = tracegen::cmd_generate(config->config);
        emit(out, report.to_json().dump(2));
        if (!report.persona_dirs.empty()) return TRACEGEN_OK;
        if (report.failures.empty()) return fail(TRACEGEN_INTERNAL, "no persona produced");
        std::string message = "every persona failed:";
        for (const auto& f : report.failures) message += "\n  persona " + std::to_string(f.index) + ": " + f.message;
        return fail(static_cast<int>(report.failures.front().code), message);
    });
}

int tracegen_build_memory(const tracegen_config* config, const char* descriptions, const char* out_path,
                          tracegen_result** out) {
    if (!config || !out_path || !out) return fail(TRACEGEN_INVALID_ARGUMENT, "config, out_path and out are required");
    return guarded([&]() -> int {
        std::optional<std::filesystem::path> desc;
        if (descriptions) desc = descriptions;
        const auto outcome = tracegen::cmd_build_memory(config->config, desc, out_path);
        const auto& report = outcome.report;
        tracegen::Json j{{"descriptions", report.descriptions},
                         {"failed_descriptions", report.failed_descriptions},
                         {"parsed_events", report.parsed_events},
                         {"skipped_events", report.skipped_events},
                         {"duplicates_removed", report.duplicates_removed},
                         {"events", outcome.events},
                         {"warnings", report.warnings}};
        return emit(out, j.dump(2));
    });
}

int tracegen_evaluate(const tracegen_config* config, const char* const* corpora, size_t count, const char* out_dir,
                      tracegen_result** out) {
    if (!config || !out || (count > 0 && !corpora)) return fail(TRACEGEN_INVALID_ARGUMENT, "config, corpora and out are required");
    return guarded([&]() -> int {
        std::vector<std::filesystem::path> paths;
        for (size_t i = 0; i < count; ++i) {
            if (!corpora[i]) return fail(TRACEGEN_INVALID_ARGUMENT, "corpus path is NULL");
            paths.emplace_back(corpora[i]);
        }
        auto result = tracegen::cmd_evaluate(config->config, paths, out_dir ? out_dir : "");
        return emit(out, result.report.dump(2), std::move(result.table));
    });
}

int tracegen_schema(const char* name, tracegen_result** out) {
    if (!out) return fail(TRACEGEN_INVALID_ARGUMENT, "out is NULL");
    return guarded([&]() -> int {
        if (!name) {
            tracegen::Json names = tracegen::Json::array();
            for (const auto id : tracegen::kAllSchemas) names.push_back(tracegen::schema_name(id));
            return emit(out, names.dump(2));
        }
        const auto id = tracegen::schema_from_name(name);
        if (!id) return fail(TRACEGEN_INVALID_ARGUMENT, std::string("unknown schema ") + name);
        return emit(out, tracegen::schema_document(*id).dump(2));
    });
}

int tracegen_embedding_metrics(const double* data, size_t n, size_t dim, double* pairwise_correlation,
                               double* remote_clique, double* entropy) {
    if (!data && n * dim > 0) return fail(TRACEGEN_INVALID_ARGUMENT, "data is NULL");
    return guarded([&]() -> int {
        tracegen::Embeddings e(n, std::vector<double>(dim));
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < dim; ++k) e[i][k] = data[i * dim + k];
        }
        if (pairwise_correlation) *pairwise_correlation = tracegen::pairwise_correlation(e);
        if (remote_clique) *remote_clique = tracegen::remote_clique(e);
        if (entropy) *entropy = tracegen::entropy_grid(e);
        return TRACEGEN_OK;
    });
}

}  // extern "C"
