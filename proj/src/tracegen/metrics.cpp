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

#include "tracegen/metrics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "tracegen/error.hpp"
#include "tracegen/footprint.hpp"
#include "tracegen/gateway.hpp"
#include "tracegen/prompts.hpp"
#include "tracegen/random.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

void require_matrix(const Embeddings& e, std::size_t min_dim) {
    if (e.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two embeddings");
    const auto dim = e.front().size();
    if (dim < min_dim) throw Error(ErrorCode::kInvalidArgument, "embedding dimension too small");
    for (const auto& v : e) {
        if (v.size() != dim) throw Error(ErrorCode::kInvalidArgument, "embeddings differ in dimension");
    }
}

double clamp_unit(double r) { return std::max(-1.0, std::min(1.0, r)); }

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r'; }

bool starts_icase(std::string_view s, std::size_t pos, std::string_view prefix) {
    if (s.size() - pos < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[pos + i])) != prefix[i]) return false;
    }
    return true;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

double pairwise_correlation(const Embeddings& embeddings) {
    require_matrix(embeddings, 2);
    const auto n = embeddings.size();
    const auto d = embeddings.front().size();
    // Center each vector once; the pair loop is then dot products.
    std::vector<std::vector<double>> centered(n);
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        double mean = 0;
        for (double x : embeddings[i]) mean += x;
        mean /= static_cast<double>(d);
        centered[i].resize(d);
        double ss = 0;
        for (std::size_t k = 0; k < d; ++k) {
            centered[i][k] = embeddings[i][k] - mean;
            ss += centered[i][k] * centered[i][k];
        }
        if (!(ss > 0)) {
            throw Error(ErrorCode::kDegenerateVector, "embedding " + std::to_string(i) + " has constant coordinates");
        }
        norms[i] = std::sqrt(ss);
    }
    double sum = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dot = 0;
            for (std::size_t k = 0; k < d; ++k) dot += centered[i][k] * centered[j][k];
            sum += clamp_unit(dot / (norms[i] * norms[j]));
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

double remote_clique(const Embeddings& embeddings) {
    require_matrix(embeddings, 1);
    const auto n = embeddings.size();
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        double ss = 0;
        for (double x : embeddings[i]) ss += x * x;
        if (!(ss > 0)) throw Error(ErrorCode::kZeroVector, "embedding " + std::to_string(i) + " is the zero vector");
        norms[i] = std::sqrt(ss);
    }
    double sum = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dot = 0;
            for (std::size_t k = 0; k < embeddings[i].size(); ++k) dot += embeddings[i][k] * embeddings[j][k];
            sum += 1.0 - clamp_unit(dot / (norms[i] * norms[j]));
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

std::vector<std::array<double, 2>> project_pca2(const Embeddings& embeddings) {
    require_matrix(embeddings, 1);
    const auto n = static_cast<Eigen::Index>(embeddings.size());
    const auto d = static_cast<Eigen::Index>(embeddings.front().size());
    Eigen::MatrixXd x(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < d; ++k) x(i, k) = embeddings[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::kInternal, "eigendecomposition failed");

    // Eigenvalues ascend; the last columns are the leading components.
    // Directions with (numerically) no variance are treated as missing, so
    // rounding noise never gets spread across the grid.
    const double floor = 1e-12 * std::max(1.0, solver.eigenvalues()(d - 1));
    std::array<Eigen::VectorXd, 2> components;
    for (int c = 0; c < 2; ++c) {
        if (c >= d || solver.eigenvalues()(d - 1 - c) <= floor) {
            components[c] = Eigen::VectorXd::Zero(d);
            continue;
        }
        Eigen::VectorXd v = solver.eigenvectors().col(d - 1 - c);
        Eigen::Index arg = 0;
        for (Eigen::Index k = 1; k < d; ++k) {
            if (std::abs(v(k)) > std::abs(v(arg))) arg = k;
        }
        if (v(arg) < 0) v = -v;
        components[c] = v;
    }
    std::vector<std::array<double, 2>> out(embeddings.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = {x.row(i).dot(components[0]), x.row(i).dot(components[1])};
    }
    return out;
}

std::size_t grid_bin(double x, double lo, double hi, std::size_t bins) {
    if (!(hi > lo)) return 0;
    const double t = (x - lo) / (hi - lo) * static_cast<double>(bins);
    if (!(t > 0)) return 0;
    return std::min(bins - 1, static_cast<std::size_t>(std::floor(t)));
}

double grid_entropy(const std::vector<std::array<double, 2>>& points, std::size_t bins) {
    if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "no points");
    std::array<double, 2> lo{points[0][0], points[0][1]};
    std::array<double, 2> hi = lo;
    for (const auto& p : points) {
        for (int a = 0; a < 2; ++a) {
            lo[a] = std::min(lo[a], p[a]);
            hi[a] = std::max(hi[a], p[a]);
        }
    }
    std::vector<std::size_t> counts(bins * bins, 0);
    for (const auto& p : points) {
        ++counts[grid_bin(p[0], lo[0], hi[0], bins) * bins + grid_bin(p[1], lo[1], hi[1], bins)];
    }
    double h = 0;
    const double n = static_cast<double>(points.size());
    for (const auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log(p);
    }
    return h;
}

double entropy_grid(const Embeddings& embeddings) { return grid_entropy(project_pca2(embeddings)); }

std::size_t count_links(std::string_view doc) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < doc.size()) {
        std::size_t scheme = 0;
        if (starts_icase(doc, i, "https://")) {
            scheme = 8;
        } else if (starts_icase(doc, i, "http://")) {
            scheme = 7;
        }
        if (scheme == 0 || i + scheme >= doc.size() || is_space(static_cast<unsigned char>(doc[i + scheme]))) {
            ++i;
            continue;
        }
        ++count;
        i += scheme;
        while (i < doc.size() && !is_space(static_cast<unsigned char>(doc[i]))) ++i;
    }
    return count;
}

double avg_links(const std::vector<std::string>& documents) {
    if (documents.empty()) throw Error(ErrorCode::kInvalidArgument, "empty corpus");
    double sum = 0;
    for (const auto& d : documents) sum += static_cast<double>(count_links(d));
    return sum / static_cast<double>(documents.size());
}

double avg_length(const std::vector<std::string>& documents) {
    if (documents.empty()) throw Error(ErrorCode::kInvalidArgument, "empty corpus");
    double sum = 0;
    for (const auto& d : documents) sum += static_cast<double>(text::codepoint_count(d));
    return sum / static_cast<double>(documents.size());
}

Json CorpusMetrics::to_json() const {
    return Json{{"pairwise_correlation", pairwise_correlation},
                {"remote_clique", remote_clique},
                {"entropy", entropy},
                {"avg_links", avg_links},
                {"avg_length", avg_length},
                {"n_docs", n_docs},
                {"sample_size", sample_size},
                {"samples", samples}};
}

CorpusMetrics compute_metrics(const std::vector<std::string>& documents, const Embeddings& embeddings) {
    if (documents.size() != embeddings.size()) {
        throw Error(ErrorCode::kInvalidArgument, "documents and embeddings differ in length");
    }
    CorpusMetrics m;
    m.pairwise_correlation = pairwise_correlation(embeddings);
    m.remote_clique = remote_clique(embeddings);
    m.entropy = entropy_grid(embeddings);
    m.avg_links = avg_links(documents);
    m.avg_length = avg_length(documents);
    m.n_docs = documents.size();
    m.sample_size = documents.size();
    m.samples = 1;
    return m;
}

CorpusMetrics subsampled_eval(const std::vector<std::string>& documents, const Embedder& embed,
                              const SubsampleOptions& options) {
    if (documents.empty()) throw Error(ErrorCode::kInvalidArgument, "empty corpus");
    if (options.threshold < 2 || options.repeats == 0) {
        throw Error(ErrorCode::kInvalidArgument, "threshold must be >= 2 and repeats >= 1");
    }
    Embeddings embeddings;
    embeddings.reserve(documents.size());
    for (const auto& d : documents) embeddings.push_back(embed(d));
    if (documents.size() <= options.threshold) return compute_metrics(documents, embeddings);

    CorpusMetrics mean;
    for (std::size_t r = 0; r < options.repeats; ++r) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
        auto picks = rng.sample_without_replacement(documents.size(), options.threshold);
        std::sort(picks.begin(), picks.end());
        std::vector<std::string> docs;
        Embeddings vecs;
        for (const auto p : picks) {
            docs.push_back(documents[p]);
            vecs.push_back(embeddings[p]);
        }
        const auto m = compute_metrics(docs, vecs);
        mean.pairwise_correlation += m.pairwise_correlation;
        mean.remote_clique += m.remote_clique;
        mean.entropy += m.entropy;
        mean.avg_links += m.avg_links;
        mean.avg_length += m.avg_length;
    }
    const double k = static_cast<double>(options.repeats);
    mean.pairwise_correlation /= k;
    mean.remote_clique /= k;
    mean.entropy /= k;
    mean.avg_links /= k;
    mean.avg_length /= k;
    mean.n_docs = documents.size();
    mean.sample_size = options.threshold;
    mean.samples = options.repeats;
    return mean;
}

Json JudgeScores::to_json() const {
    auto axis = [](const JudgeAxis& a) { return Json{{"score", a.score}, {"explanation", a.explanation}}; };
    return Json{{"Tone", axis(tone)},
                {"Fluency", axis(fluency)},
                {"Coherence", axis(coherence)},
                {"Informativeness", axis(informativeness)},
                {"Engagement", axis(engagement)},
                {"Overall", Json{{"score", overall}, {"summary", summary}}}};
}

JudgeScores parse_judge(const Json& j) {
    const auto violations = validate(SchemaId::kJudge, j);
    if (!violations.empty()) throw Error(ErrorCode::kSchemaViolation, "invalid judge output", to_strings(violations));
    auto axis = [&](const char* key) {
        return JudgeAxis{j[key]["score"].get<double>(), j[key]["explanation"].get<std::string>()};
    };
    JudgeScores s;
    s.tone = axis("Tone");
    s.fluency = axis("Fluency");
    s.coherence = axis("Coherence");
    s.informativeness = axis("Informativeness");
    s.engagement = axis("Engagement");
    s.overall = j["Overall"]["score"].get<double>();
    s.summary = j["Overall"]["summary"].get<std::string>();
    return s;
}

JudgeScores llm_judge(Gateway& gateway, std::string_view email) {
    try {
        return parse_judge(gateway.complete_json(prompts::judge(email), SchemaId::kJudge));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoJsonFound && e.code() != ErrorCode::kSchemaViolation) throw;
        throw Error(ErrorCode::kJudgeParseFailed, std::string("judge output unusable after one repair: ") + e.what(),
                    e.details());
    }
}

JudgeScores mean_scores(const std::vector<JudgeScores>& scores) {
    JudgeScores m;
    if (scores.empty()) return m;
    for (const auto& s : scores) {
        m.tone.score += s.tone.score;
        m.fluency.score += s.fluency.score;
        m.coherence.score += s.coherence.score;
        m.informativeness.score += s.informativeness.score;
        m.engagement.score += s.engagement.score;
        m.overall += s.overall;
    }
    const double n = static_cast<double>(scores.size());
    for (auto* a : {&m.tone, &m.fluency, &m.coherence, &m.informativeness, &m.engagement}) a->score /= n;
    m.overall /= n;
    return m;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext != ".jsonl" && ext != ".txt") {
        throw Error(ErrorCode::kInvalidArgument, path.string() + ": corpus must be .jsonl or .txt");
    }
    std::istringstream in(read_file(path));
    std::vector<std::string> docs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        if (ext == ".txt") {
            docs.push_back(line);
            continue;
        }
        auto j = Json::parse(line, nullptr, false);
        const auto where = path.string() + ":" + std::to_string(line_no);
        if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::kParseError, where + " is not a JSON object");
        if (j.contains("payload")) {
            docs.push_back(document_text(from_envelope(j).artifact));
        } else if (j.contains("text") && j["text"].is_string()) {
            docs.push_back(j["text"].get<std::string>());
        } else {
            throw Error(ErrorCode::kParseError, where + " has neither an envelope payload nor \"text\"");
        }
    }
    return docs;
}

Json metrics_report(const std::vector<ReportRow>& rows, const SubsampleOptions& options) {
    Json corpora = Json::array();
    for (const auto& r : rows) {
        Json row{{"name", r.name}, {"metrics", r.metrics.to_json()}};
        if (r.judge) row["judge"] = r.judge->to_json();
        corpora.push_back(std::move(row));
    }
    return Json{{"protocol", Json{{"threshold", options.threshold}, {"repeats", options.repeats}, {"seed", options.seed}}},
                {"columns", Json::array({"Pairwise Corr.", "Remote-Clique", "Entropy", "Avg. #Links", "Avg. Length"})},
                {"corpora", std::move(corpora)}};
}

std::string render_table(const std::vector<ReportRow>& rows) {
    const std::vector<std::string> headers = {"Corpus",  "Pairwise Corr.", "Remote-Clique",
                                              "Entropy", "Avg. #Links",    "Avg. Length"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        cells.push_back({r.name, fixed(r.metrics.pairwise_correlation, 4), fixed(r.metrics.remote_clique, 4),
                         fixed(r.metrics.entropy, 4), fixed(r.metrics.avg_links, 4), fixed(r.metrics.avg_length, 2)});
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = text::codepoint_count(headers[c]);
        for (const auto& row : cells) width[c] = std::max(width[c], text::codepoint_count(row[c]));
    }
    auto line = [&](const std::vector<std::string>& row) {
        std::string out = "|";
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto pad = std::string(width[c] - text::codepoint_count(row[c]), ' ');
            out += " " + (c == 0 ? row[c] + pad : pad + row[c]) + " |";
        }
        return out + "\n";
    };
    std::string out = line(headers);
    out += "|";
    for (std::size_t c = 0; c < headers.size(); ++c) out += std::string(width[c] + 2, '-') + "|";
    out += "\n";
    for (const auto& row : cells) out += line(row);
    return out;
}

}  // namespace tracegen
