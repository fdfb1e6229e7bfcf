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

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stancemix/corpus.hpp"

namespace stancemix {

// Word-list backed lexicons for rule-based language tagging. All entries are
// matched case-insensitively.
struct LexiconSet {
    std::unordered_set<std::string> english_words;
    std::unordered_set<std::string> hindi_words;
    std::unordered_set<std::string> named_entities;

    // Loads english_words.txt, hindi_words.txt, named_entities.txt from dir.
    static LexiconSet load(const std::filesystem::path& dir);
    static std::unordered_set<std::string> load_word_file(const std::filesystem::path& path);
};

// How hashtags are tagged:
//   Rest    - every hashtag is 'rest' (the rule-based default).
//   Content - the hashtag body is decomposed and tagged by the majority
//             language of its dictionary-known words; hashtags whose words
//             are all unknown fall back to 'rest'.
enum class HashtagPolicy { Rest, Content };

std::string_view to_string(HashtagPolicy policy);
std::optional<HashtagPolicy> parse_hashtag_policy(std::string_view s);

// True when the token is a hashtag, mention, URL, emoticon, pure
// punctuation/digit string, or named-entity match.
bool is_rest(std::string_view token, const LexiconSet& lexicons);

// Tag assignment for one token; rule is the 1-based index of the rule that
// fired, for audit:
//   1 shape (hashtag/mention/URL/emoticon/punctuation), 2 named entity,
//   3 Hindi dictionary, 4 English dictionary, 5 fallback (Hindi).
struct TagDecision {
    LanguageTag tag;
    int rule;
};

TagDecision tag_token(std::string_view token, const LexiconSet& lexicons,
                      HashtagPolicy policy = HashtagPolicy::Rest);

// Tags every token. Requires at least one non-empty dictionary. Output
// length equals input length; surfaces are unchanged.
std::vector<TokenAnnotation> tag_tokens(const std::vector<std::string>& tokens,
                                        const LexiconSet& lexicons,
                                        HashtagPolicy policy = HashtagPolicy::Rest);

std::vector<TagDecision> tag_tokens_with_audit(const std::vector<std::string>& tokens,
                                               const LexiconSet& lexicons,
                                               HashtagPolicy policy = HashtagPolicy::Rest);

}  // namespace stancemix
