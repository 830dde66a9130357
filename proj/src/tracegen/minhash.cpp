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

#include "tracegen/minhash.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "tracegen/error.hpp"
#include "tracegen/random.hpp"
#include "tracegen/text.hpp"

namespace tracegen {
namespace {

// Splits UTF-8 into code point substrings (invalid bytes stand alone).
std::vector<std::string> code_points(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = 1;
        if (c >= 0xF0) {
            len = 4;
        } else if (c >= 0xE0) {
            len = 3;
        } else if (c >= 0xC0) {
            len = 2;
        }
        len = std::min(len, s.size() - i);
        out.emplace_back(s.substr(i, len));
        i += len;
    }
    return out;
}

std::uint64_t function_salt(std::uint64_t seed, std::size_t i) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1));
}

}  // namespace

void MinHashParams::validate() const {
    if (k < 16) throw Error(ErrorCode::kInvalidArgument, "MinHash k must be >= 16");
    if (bands == 0 || rows == 0 || bands * rows != k) {
        throw Error(ErrorCode::kInvalidArgument, "LSH bands * rows must equal k");
    }
}

std::vector<std::string> shingles(std::string_view input, std::size_t char_ngram) {
    auto tokens = text::word_tokens(input);
    if (char_ngram > 0) {
        const auto cps = code_points(text::join(tokens, " "));
        std::vector<std::string> grams;
        if (!cps.empty() && cps.size() < char_ngram) {
            grams.push_back(text::join(cps, ""));
        }
        for (std::size_t i = 0; i + char_ngram <= cps.size(); ++i) {
            std::string g;
            for (std::size_t j = i; j < i + char_ngram; ++j) g += cps[j];
            grams.push_back(std::move(g));
        }
        tokens = std::move(grams);
    }
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return tokens;
}

MinHashSignature minhash_signature(const std::vector<std::string>& tokens, std::size_t k, std::uint64_t seed) {
    if (k < 16) throw Error(ErrorCode::kInvalidArgument, "MinHash k must be >= 16");
    if (tokens.empty()) throw Error(ErrorCode::kEmptyTokenSet, "text has no word tokens");
    std::vector<std::uint64_t> base;
    base.reserve(tokens.size());
    for (const auto& t : tokens) base.push_back(fnv1a64(t));
    MinHashSignature sig;
    sig.seed = seed;
    sig.minima.assign(k, std::numeric_limits<std::uint64_t>::max());
    for (std::size_t i = 0; i < k; ++i) {
        const auto salt = function_salt(seed, i);
        auto& m = sig.minima[i];
        for (const auto h : base) m = std::min(m, splitmix64(h ^ salt));
    }
    return sig;
}

MinHashSignature minhash_signature(std::string_view input, std::size_t k, std::uint64_t seed) {
    return minhash_signature(shingles(input), k, seed);
}

MinHashSignature minhash_signature(std::string_view input, const MinHashParams& params) {
    return minhash_signature(shingles(input, params.char_ngram), params.k, params.seed);
}

double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b) {
    if (a.k() != b.k() || a.seed != b.seed || a.k() == 0) {
        throw Error(ErrorCode::kSignatureMismatch, "signatures differ in k or seed family");
    }
    std::size_t agree = 0;
    for (std::size_t i = 0; i < a.k(); ++i) agree += a.minima[i] == b.minima[i];
    return static_cast<double>(agree) / static_cast<double>(a.k());
}

LshIndex::LshIndex(std::size_t bands, std::size_t rows) : bands_(bands), rows_(rows), buckets_(bands) {
    if (bands == 0 || rows == 0) throw Error(ErrorCode::kInvalidArgument, "LSH needs bands and rows > 0");
}

std::uint64_t LshIndex::band_key(const MinHashSignature& signature, std::size_t band) const {
    std::uint64_t h = splitmix64(band);
    for (std::size_t r = 0; r < rows_; ++r) h = splitmix64(h ^ signature.minima[band * rows_ + r]);
    return h;
}

void LshIndex::insert(std::size_t id, const MinHashSignature& signature) {
    if (signature.k() != bands_ * rows_) throw Error(ErrorCode::kSignatureMismatch, "signature length != bands * rows");
    for (std::size_t b = 0; b < bands_; ++b) buckets_[b][band_key(signature, b)].push_back(id);
    ++size_;
}

std::vector<std::size_t> LshIndex::candidates(const MinHashSignature& signature) const {
    if (signature.k() != bands_ * rows_) throw Error(ErrorCode::kSignatureMismatch, "signature length != bands * rows");
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < bands_; ++b) {
        const auto it = buckets_[b].find(band_key(signature, b));
        if (it != buckets_[b].end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> dedup_signatures(const std::vector<MinHashSignature>& signatures, double threshold,
                                          const MinHashParams& params) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "dedup threshold must be in (0, 1)");
    }
    params.validate();
    LshIndex index(params.bands, params.rows);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < signatures.size(); ++i) {
        bool duplicate = false;
        for (const auto j : index.candidates(signatures[i])) {
            if (estimate_jaccard(signatures[i], signatures[j]) >= threshold) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        index.insert(i, signatures[i]);
        kept.push_back(i);
    }
    return kept;
}

std::vector<SeedEvent> dedup(const std::vector<SeedEvent>& events, double threshold, const MinHashParams& params) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "dedup threshold must be in (0, 1)");
    }
    params.validate();
    LshIndex index(params.bands, params.rows);
    std::vector<MinHashSignature> signatures(events.size());
    std::vector<SeedEvent> out;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto set = shingles(events[i].text(), params.char_ngram);
        if (set.empty()) {
            out.push_back(events[i]);
            continue;
        }
        signatures[i] = minhash_signature(set, params.k, params.seed);
        bool duplicate = false;
        for (const auto j : index.candidates(signatures[i])) {
            if (estimate_jaccard(signatures[i], signatures[j]) >= threshold) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        index.insert(i, signatures[i]);
        out.push_back(events[i]);
    }
    return out;
}

}  // namespace tracegen
