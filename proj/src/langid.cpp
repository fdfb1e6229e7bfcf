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

#include "stancemix/langid.hpp"

#include "stancemix/errors.hpp"
#include "stancemix/preprocess.hpp"
#include "stancemix/util.hpp"

namespace stancemix {

std::unordered_set<std::string> LexiconSet::load_word_file(const std::filesystem::path& path) {
    std::unordered_set<std::string> words;
    std::string content = read_file(path);
    for (std::string_view line : split_lines(content)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string_view::npos) continue;
        std::size_t end = line.find_last_not_of(" \t");
        words.insert(lower_ascii(line.substr(begin, end - begin + 1)));
    }
    return words;
}

LexiconSet LexiconSet::load(const std::filesystem::path& dir) {
    LexiconSet set;
    set.english_words = load_word_file(dir / "english_words.txt");
    set.hindi_words = load_word_file(dir / "hindi_words.txt");
    set.named_entities = load_word_file(dir / "named_entities.txt");
    if (set.english_words.empty() && set.hindi_words.empty()) {
        throw ConfigError("lexicon directory has empty dictionaries: " + dir.string());
    }
    if (set.named_entities.empty()) {
        throw ConfigError("named-entity list is empty: " + (dir / "named_entities.txt").string());
    }
    return set;
}

std::string_view to_string(HashtagPolicy policy) {
    return policy == HashtagPolicy::Rest ? "rest" : "content";
}

std::optional<HashtagPolicy> parse_hashtag_policy(std::string_view s) {
    if (s == "rest") return HashtagPolicy::Rest;
    if (s == "content") return HashtagPolicy::Content;
    return std::nullopt;
}

bool is_rest(std::string_view token, const LexiconSet& lexicons) {
    if (is_hashtag(token) || is_mention(token) || is_url(token) || is_emoticon(token) ||
        is_punct_or_digit(token)) {
        return true;
    }
    return lexicons.named_entities.contains(lower_ascii(token));
}

namespace {

// Majority language of the dictionary-known words in a hashtag body.
// Hindi wins ties, consistent with the tagger's Hindi-first resolution.
LanguageTag content_tag_for_hashtag(std::string_view token, const LexiconSet& lexicons) {
    int hi = 0, en = 0;
    for (const std::string& word : decompose_hashtag(token)) {
        std::string low = lower_ascii(word);
        if (lexicons.hindi_words.contains(low)) {
            ++hi;
        } else if (lexicons.english_words.contains(low)) {
            ++en;
        }
    }
    if (hi == 0 && en == 0) return LanguageTag::Rest;
    return hi >= en ? LanguageTag::Hi : LanguageTag::En;
}

}  // namespace

TagDecision tag_token(std::string_view token, const LexiconSet& lexicons, HashtagPolicy policy) {
    if (is_hashtag(token)) {
        if (policy == HashtagPolicy::Content) {
            return TagDecision{content_tag_for_hashtag(token, lexicons), 1};
        }
        return TagDecision{LanguageTag::Rest, 1};
    }
    if (is_mention(token) || is_url(token) || is_emoticon(token) || is_punct_or_digit(token)) {
        return TagDecision{LanguageTag::Rest, 1};
    }
    std::string low = lower_ascii(token);
    if (lexicons.named_entities.contains(low)) {
        return TagDecision{LanguageTag::Rest, 2};
    }
    // Hindi before English: the corpus is Hindi-dominant, so ambiguous
    // dictionary words ("to", "main") resolve to 'hi'.
    if (lexicons.hindi_words.contains(low)) {
        return TagDecision{LanguageTag::Hi, 3};
    }
    if (lexicons.english_words.contains(low)) {
        return TagDecision{LanguageTag::En, 4};
    }
    return TagDecision{LanguageTag::Hi, 5};
}

std::vector<TagDecision> tag_tokens_with_audit(const std::vector<std::string>& tokens,
                                               const LexiconSet& lexicons, HashtagPolicy policy) {
    if (lexicons.english_words.empty() && lexicons.hindi_words.empty()) {
        throw ConfigError("language tagging needs at least one non-empty dictionary");
    }
    std::vector<TagDecision> out;
    out.reserve(tokens.size());
    for (const std::string& token : tokens) {
        out.push_back(tag_token(token, lexicons, policy));
    }
    return out;
}

std::vector<TokenAnnotation> tag_tokens(const std::vector<std::string>& tokens,
                                        const LexiconSet& lexicons, HashtagPolicy policy) {
    std::vector<TagDecision> decisions = tag_tokens_with_audit(tokens, lexicons, policy);
    std::vector<TokenAnnotation> out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        out.push_back(TokenAnnotation{tokens[i], decisions[i].tag});
    }
    return out;
}

}  // namespace stancemix
