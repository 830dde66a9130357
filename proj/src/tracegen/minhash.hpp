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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tracegen/events.hpp"

namespace tracegen {

struct MinHashParams {
    std::size_t k = 256;
    std::size_t bands = 32;
    std::size_t rows = 8;
    std::uint64_t seed = 0;
    // 0 shingles by word tokens; n > 0 uses character n-grams of the
    // lowercased, token-joined text instead.
    std::size_t char_ngram = 0;

    // Throws kInvalidArgument unless k >= 16 and bands * rows == k.
    void validate() const;
};

struct MinHashSignature {
    std::vector<std::uint64_t> minima;
    std::uint64_t seed = 0;

    std::size_t k() const { return minima.size(); }
    bool operator==(const MinHashSignature&) const = default;
};

// Shingle set of a text under the params' shingling mode (sorted, unique).
std::vector<std::string> shingles(std::string_view text, std::size_t char_ngram = 0);

// Signature of a shingle set. Duplicates in `tokens` are irrelevant.
// Throws kEmptyTokenSet for an empty set, kInvalidArgument for k < 16.
MinHashSignature minhash_signature(const std::vector<std::string>& tokens, std::size_t k, std::uint64_t seed);

// Signature of a text's word tokens.
MinHashSignature minhash_signature(std::string_view text, std::size_t k, std::uint64_t seed);

MinHashSignature minhash_signature(std::string_view text, const MinHashParams& params);

// Fraction of agreeing minima. Throws kSignatureMismatch on differing k or seed.
double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b);

// Band/row bucket index over signatures.
class LshIndex {
public:
    LshIndex(std::size_t bands, std::size_t rows);

    // Throws kSignatureMismatch when the signature length is not bands * rows.
    void insert(std::size_t id, const MinHashSignature& signature);

    // Ids sharing at least one band bucket with `signature`, ascending.
    std::vector<std::size_t> candidates(const MinHashSignature& signature) const;

    std::size_t bands() const { return bands_; }
    std::size_t rows() const { return rows_; }
    std::size_t size() const { return size_; }

private:
    std::uint64_t band_key(const MinHashSignature& signature, std::size_t band) const;

    std::size_t bands_;
    std::size_t rows_;
    std::size_t size_ = 0;
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::size_t>>> buckets_;
};

// Greedy near-duplicate pass in input order over precomputed signatures.
// Returns the indices kept: an entry is dropped iff an already-kept LSH
// candidate has estimated Jaccard >= threshold.
std::vector<std::size_t> dedup_signatures(const std::vector<MinHashSignature>& signatures, double threshold,
                                          const MinHashParams& params = {});

// dedup_signatures over SeedEvent::text(). Events whose text has no tokens
// are kept (they cannot be compared). threshold must lie in (0, 1).
std::vector<SeedEvent> dedup(const std::vector<SeedEvent>& events, double threshold = 0.8,
                             const MinHashParams& params = {});

}  // namespace tracegen
