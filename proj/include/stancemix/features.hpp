// Copyright 2026 The stancemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "stancemix/corpus.hpp"
#include "stancemix/preprocess.hpp"

namespace stancemix {

// --- feature descriptors ---------------------------------------------------

// Character n-gram (1..3 codepoints, within a token).
struct CharGram {
    std::string gram;
    auto operator<=>(const CharGram&) const = default;
};

// Word n-gram (1..5 contiguous tokens of one tweet).
struct WordGram {
    std::vector<std::string> words;
    auto operator<=>(const WordGram&) const = default;
};

// Stance-indicative token, mined per language-tag partition.
struct SiToken {
    std::string token;
    LanguageTag tag;
    auto operator<=>(const SiToken&) const = default;
};

using FeatureDescriptor = std::variant<CharGram, WordGram, SiToken>;

// Stable one-line text form, also the lexicographic tie-break key:
//   "c<TAB>gram" | "w<TAB>w1 w2 ..." | "s<TAB>tag<TAB>token"
std::string serialize(const FeatureDescriptor& descriptor);
FeatureDescriptor deserialize_descriptor(std::string_view line);

// --- fitting configuration --------------------------------------------------

// Whether thresholds and SI frequencies count every occurrence or the number
// of tweets containing the item.
enum class CountMode { Occurrence, Document };
std::string_view to_string(CountMode mode);
std::optional<CountMode> parse_count_mode(std::string_view s);

struct FeatureThresholds {
    int char_min = 8;
    int word_min = 10;
    int si_min_count = 5;
    double si_min_score = 0.6;
};

struct FeatureFamilies {
    bool chars = true;
    bool words = true;
    bool si = true;
};
std::string_view to_string(const FeatureFamilies& families);  // char|word|si|all
std::optional<FeatureFamilies> parse_feature_families(std::string_view s);

// A tweet after feature-time preprocessing: lowercased surviving tokens with
// their language tags, plus the stance label when known.
struct PreprocessedTweet {
    std::string id;
    std::vector<TokenAnnotation> tokens;
    std::optional<StanceLabel> stance;
};

// Runs preprocess_for_features over every tweet. Requires token annotations.
std::vector<PreprocessedTweet> preprocess_corpus(const Corpus& corpus,
                                                 const StopwordList& stopwords);

// --- feature extraction ------------------------------------------------------

std::set<FeatureDescriptor> build_char_ngrams(const std::vector<PreprocessedTweet>& docs,
                                              int n_min = 1, int n_max = 3, int min_count = 8,
                                              CountMode mode = CountMode::Occurrence);

std::set<FeatureDescriptor> build_word_ngrams(const std::vector<PreprocessedTweet>& docs,
                                              int n_min = 1, int n_max = 5, int min_count = 10,
                                              CountMode mode = CountMode::Occurrence);

// Score(token) = max over stance labels of freq(token, label) / freq(token).
// When tag is given, counts are restricted to occurrences carrying that
// language tag. Throws std::invalid_argument when the token does not occur.
double si_score(std::string_view token, const std::vector<PreprocessedTweet>& docs,
                CountMode mode = CountMode::Occurrence,
                std::optional<LanguageTag> tag = std::nullopt);

// Mines stance-indicative (token, tag) pairs per language partition: a pair
// is kept when its in-partition frequency is >= min_count and its score is
// >= min_score. Requires stance labels on every document.
std::set<FeatureDescriptor> build_si_tokens(const std::vector<PreprocessedTweet>& docs,
                                            double min_score = 0.6, int min_count = 5,
                                            CountMode mode = CountMode::Occurrence);

// --- the fitted space --------------------------------------------------------

class FeatureSpace {
public:
    FeatureSpace() = default;

    // Descriptors are stored sorted by family (char, si, word order of the
    // serialized form) so indices are reproducible.
    static FeatureSpace from_descriptors(std::vector<FeatureDescriptor> descriptors,
                                         FeatureThresholds thresholds, CountMode mode,
                                         std::uint64_t corpus_fingerprint);

    std::size_t size() const { return descriptors_.size(); }
    const std::vector<FeatureDescriptor>& descriptors() const { return descriptors_; }
    const FeatureThresholds& thresholds() const { return thresholds_; }
    CountMode count_mode() const { return mode_; }

    // Fingerprint of the corpus the space was fitted on (hash of the sorted
    // tweet ids): the leakage audit trail.
    std::uint64_t corpus_fingerprint() const { return corpus_fingerprint_; }
    // Fingerprint binding corpus, thresholds and descriptor list; models
    // record this value and refuse to run against a different space.
    std::uint64_t space_fingerprint() const { return space_fingerprint_; }

    std::optional<std::uint32_t> index_of(const std::string& key) const;

    void save(std::ostream& out) const;
    static FeatureSpace load(std::istream& in);

private:
    std::vector<FeatureDescriptor> descriptors_;
    std::unordered_map<std::string, std::uint32_t> index_;
    FeatureThresholds thresholds_;
    CountMode mode_ = CountMode::Occurrence;
    std::uint64_t corpus_fingerprint_ = 0;
    std::uint64_t space_fingerprint_ = 0;
};

// Hash of the sorted ids of the tweets a space is fitted on.
std::uint64_t corpus_fingerprint(const std::vector<PreprocessedTweet>& docs);

// Fits the selected feature families on the given documents.
FeatureSpace fit_feature_space(const std::vector<PreprocessedTweet>& docs,
                               const FeatureFamilies& families,
                               const FeatureThresholds& thresholds,
                               CountMode mode = CountMode::Occurrence);

// Binary presence vector: sorted unique indices of active descriptors.
struct FeatureVector {
    std::vector<std::uint32_t> indices;
    bool operator==(const FeatureVector&) const = default;
};

// Marks descriptor i active iff it occurs in the tweet. SI descriptors match
// on surface and language tag; n-grams on content only.
FeatureVector vectorize(const PreprocessedTweet& doc, const FeatureSpace& space);

}  // namespace stancemix
