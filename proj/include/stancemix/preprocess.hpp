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
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stancemix/corpus.hpp"

namespace stancemix {

// --- token shape predicates ----------------------------------------------
// Shared by the tokenizer, the feature preprocessor and the language tagger.

bool is_hashtag(std::string_view token);   // '#' + at least one word char
bool is_mention(std::string_view token);   // '@' + at least one word char
bool is_url(std::string_view token);       // http://, https:// or www. prefix
bool is_emoticon(std::string_view token);  // fixed set of common emoticons
// True when the token contains no letter at all (pure punctuation, digit
// strings, emoji).
bool is_punct_or_digit(std::string_view token);

// Splits tweet text into surface tokens:
//   - runs of whitespace delimit chunks;
//   - hashtags, mentions and URLs survive as single tokens;
//   - a chunk that is exactly a known emoticon survives as a single token;
//   - punctuation attached to a word is split off, and a run of identical
//     punctuation characters ("...", "!!!") stays one token.
// Joining the output with single spaces and re-tokenizing is a fixed point.
std::vector<std::string> tokenize(std::string_view raw_text);

// Splits a hashtag into words: '#' is stripped, then the body is cut at
// lowercase-to-uppercase boundaries, before the last capital of an acronym
// run that is followed by lowercase (so "PMBadlo" gives "PM", "Badlo"),
// and at letter/digit boundaries. Underscores become their own segments.
// Single-case bodies come back whole. Throws std::invalid_argument when the
// token is not a hashtag.
std::vector<std::string> decompose_hashtag(std::string_view token);

// Case-insensitive stopword inventory loaded from a word-per-line file
// ('#' lines are comments). The fingerprint of the source bytes is recorded
// in every eval report.
class StopwordList {
public:
    StopwordList() = default;

    static StopwordList load(const std::filesystem::path& path);
    // Merges several files (e.g. an English and a romanized-Hindi list).
    static StopwordList load(const std::vector<std::filesystem::path>& paths);
    static StopwordList from_words(std::set<std::string> words);

    bool contains(std::string_view token) const;
    bool empty() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }
    std::uint64_t fingerprint() const { return fingerprint_; }
    const std::string& source() const { return source_; }

private:
    std::set<std::string> words_;  // stored lowercase
    std::string source_;
    std::uint64_t fingerprint_ = 0;
};

// Feature-time preprocessing of an annotated token sequence: URLs and
// mentions are dropped, hashtags are replaced by their decomposition (each
// produced word inherits the hashtag's language tag), stopwords are dropped,
// and the survivors are lowercased. Relative order is preserved.
std::vector<TokenAnnotation> preprocess_for_features(const std::vector<TokenAnnotation>& tokens,
                                                     const StopwordList& stopwords);

}  // namespace stancemix
