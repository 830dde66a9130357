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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracegen/json.hpp"

namespace tracegen {

class Gateway;

using Embeddings = std::vector<std::vector<double>>;

// Mean Pearson correlation over unordered pairs, each pair correlated across
// vector coordinates. Throws kInvalidArgument (< 2 vectors, ragged or
// dimension < 2) and kDegenerateVector (a vector with constant coordinates).
double pairwise_correlation(const Embeddings& embeddings);

// Mean cosine distance (1 - cos) over unordered pairs. Throws
// kInvalidArgument and kZeroVector.
double remote_clique(const Embeddings& embeddings);

// Projection onto the top two principal components of the centered data.
// Each component's sign is fixed so its largest-magnitude loading (first on
// ties) is positive. A component that is missing (dimension < 2) or has
// no variance projects to 0.
std::vector<std::array<double, 2>> project_pca2(const Embeddings& embeddings);

// Cell of `x` in `bins` equal-width bins over [lo, hi], top edge inclusive;
// everything lands in bin 0 when hi == lo.
std::size_t grid_bin(double x, double lo, double hi, std::size_t bins = 5);

// Shannon entropy (natural log) of the 5x5 grid occupancy of 2-D points.
double grid_entropy(const std::vector<std::array<double, 2>>& points, std::size_t bins = 5);

// grid_entropy(project_pca2(embeddings)). Needs >= 2 vectors; identical
// points give 0.
double entropy_grid(const Embeddings& embeddings);

// Occurrences of http:// or https:// (any case) followed by at least one
// non-whitespace byte; each match consumes its whole non-whitespace run.
std::size_t count_links(std::string_view document);

double avg_links(const std::vector<std::string>& documents);

// Mean length in Unicode code points.
double avg_length(const std::vector<std::string>& documents);

struct CorpusMetrics {
    double pairwise_correlation = 0;
    double remote_clique = 0;
    double entropy = 0;
    double avg_links = 0;
    double avg_length = 0;
    std::size_t n_docs = 0;       // corpus size
    std::size_t sample_size = 0;  // documents per evaluated sample
    std::size_t samples = 0;      // number of samples averaged

    Json to_json() const;
    bool operator==(const CorpusMetrics&) const = default;
};

// All five metrics on one set of documents and their embeddings.
CorpusMetrics compute_metrics(const std::vector<std::string>& documents, const Embeddings& embeddings);

using Embedder = std::function<std::vector<double>(std::string_view)>;

struct SubsampleOptions {
    std::size_t threshold = 1000;
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
};

// Metrics on the whole corpus when it has at most `threshold` documents;
// otherwise the arithmetic mean over `repeats` seeded samples of size
// `threshold` drawn without replacement. Each document is embedded once.
CorpusMetrics subsampled_eval(const std::vector<std::string>& documents, const Embedder& embed,
                              const SubsampleOptions& options = {});

struct JudgeAxis {
    double score = 0;
    std::string explanation;
    bool operator==(const JudgeAxis&) const = default;
};

struct JudgeScores {
    JudgeAxis tone;
    JudgeAxis fluency;
    JudgeAxis coherence;
    JudgeAxis informativeness;
    JudgeAxis engagement;
    double overall = 0;
    std::string summary;

    Json to_json() const;
    bool operator==(const JudgeScores&) const = default;
};

// Parses the judge's JSON shape; throws kSchemaViolation (missing keys or a
// score outside [1, 5]).
JudgeScores parse_judge(const Json& j);

// Scores one email with the judge rubric. kJudgeParseFailed when the answer
// is still unusable after one repair.
JudgeScores llm_judge(Gateway& gateway, std::string_view email);

// Field-wise mean of several judge results (explanations dropped).
JudgeScores mean_scores(const std::vector<JudgeScores>& scores);

// Documents of a corpus file. ".jsonl": footprint envelopes (document text of
// the artifact) or {"text": ...} objects; ".txt": one document per non-empty
// line. Throws kIoError, kParseError, kInvalidArgument (unknown extension).
std::vector<std::string> load_corpus(const std::filesystem::path& path);

struct ReportRow {
    std::string name;
    CorpusMetrics metrics;
    std::optional<JudgeScores> judge;
};

Json metrics_report(const std::vector<ReportRow>& rows, const SubsampleOptions& options);

// Fixed-width table: Corpus | Pairwise Corr. | Remote-Clique | Entropy |
// Avg. #Links | Avg. Length.
std::string render_table(const std::vector<ReportRow>& rows);

}  // namespace tracegen
