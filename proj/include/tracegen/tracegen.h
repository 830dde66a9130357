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

/* C interface to tracegen. All objects are opaque handles owned by the
 * caller and released with the matching _free function. Every function that
 * can fail returns a TRACEGEN_* status code; on failure a message for the
 * calling thread is available from tracegen_last_error(). */
#ifndef TRACEGEN_TRACEGEN_H
#define TRACEGEN_TRACEGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(TRACEGEN_BUILDING_LIBRARY)
#define TRACEGEN_API __attribute__((visibility("default")))
#else
#define TRACEGEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define TRACEGEN_ABI_VERSION 1

enum tracegen_status {
    TRACEGEN_OK = 0,
    TRACEGEN_INVALID_ARGUMENT = 1,
    TRACEGEN_INVALID_REQUEST = 2,
    TRACEGEN_PROVIDER_UNAVAILABLE = 3,
    TRACEGEN_BUDGET_EXCEEDED = 4,
    TRACEGEN_NO_JSON_FOUND = 5,
    TRACEGEN_SCHEMA_VIOLATION = 6,
    TRACEGEN_PARSE_ERROR = 7,
    TRACEGEN_NORMALIZATION_ERROR = 8,
    TRACEGEN_EMPTY_MARGINAL = 9,
    TRACEGEN_PROFILE_GENERATION_FAILED = 10,
    TRACEGEN_EMPTY_TOKEN_SET = 11,
    TRACEGEN_SIGNATURE_MISMATCH = 12,
    TRACEGEN_ALIGNMENT_FAILED = 13,
    TRACEGEN_OUTLINE_FAILED = 14,
    TRACEGEN_GENERATION_FAILED = 15,
    TRACEGEN_DANGLING_EVENT_REF = 16,
    TRACEGEN_IO_ERROR = 17,
    TRACEGEN_DEGENERATE_VECTOR = 18,
    TRACEGEN_ZERO_VECTOR = 19,
    TRACEGEN_JUDGE_PARSE_FAILED = 20,
    TRACEGEN_CONFIG_ERROR = 21,
    TRACEGEN_VERSION_MISMATCH = 22,
    TRACEGEN_INTERNAL = 99
};

typedef struct tracegen_config tracegen_config;
typedef struct tracegen_result tracegen_result;

TRACEGEN_API int tracegen_abi_version(void);
TRACEGEN_API const char* tracegen_status_name(int status);
/* Message of the last failure on this thread; "" when none. */
TRACEGEN_API const char* tracegen_last_error(void);

/* Run configuration: defaults, or a JSON config file. */
TRACEGEN_API int tracegen_config_new(tracegen_config** out);
TRACEGEN_API int tracegen_config_load(const char* path, tracegen_config** out);
TRACEGEN_API void tracegen_config_free(tracegen_config* config);
TRACEGEN_API int tracegen_config_set_seed(tracegen_config* config, uint64_t seed);
TRACEGEN_API int tracegen_config_set_personas(tracegen_config* config, size_t personas);
TRACEGEN_API int tracegen_config_set_out(tracegen_config* config, const char* dir);
/* Forces the offline mock backend. */
TRACEGEN_API int tracegen_config_set_offline(tracegen_config* config);
/* Number of template-baseline emails evaluate adds as an extra row; 0 for none. */
TRACEGEN_API int tracegen_config_set_ablated(tracegen_config* config, size_t count);
/* Hex SHA-256 of the canonical config; the result's JSON is a string. */
TRACEGEN_API int tracegen_config_hash(const tracegen_config* config, tracegen_result** out);

/* Results carry a JSON document and, for evaluate, a rendered table. The
 * strings stay valid until tracegen_result_free. */
TRACEGEN_API const char* tracegen_result_json(const tracegen_result* result);
TRACEGEN_API const char* tracegen_result_text(const tracegen_result* result);
TRACEGEN_API void tracegen_result_free(tracegen_result* result);

/* Generates footprints into the configured output directory. Returns
 * TRACEGEN_OK when at least one persona succeeded; otherwise the first
 * persona's failure status (the result still lists every failure). */
TRACEGEN_API int tracegen_generate(const tracegen_config* config, tracegen_result** out);

/* Builds and saves an event memory. descriptions may be NULL (config or
 * built-in descriptions). */
TRACEGEN_API int tracegen_build_memory(const tracegen_config* config, const char* descriptions, const char* out_path,
                                       tracegen_result** out);

/* Metrics report over corpus files (.jsonl or .txt). out_dir may be NULL. */
TRACEGEN_API int tracegen_evaluate(const tracegen_config* config, const char* const* corpora, size_t count,
                                   const char* out_dir, tracegen_result** out);

/* JSON Schema document by name, or the list of names when name is NULL. */
TRACEGEN_API int tracegen_schema(const char* name, tracegen_result** out);

/* Embedding-only metrics over a row-major n x dim matrix. Any output pointer
 * may be NULL. */
TRACEGEN_API int tracegen_embedding_metrics(const double* data, size_t n, size_t dim, double* pairwise_correlation,
                                            double* remote_clique, double* entropy);

#ifdef __cplusplus
}
#endif

#endif /* TRACEGEN_TRACEGEN_H */
