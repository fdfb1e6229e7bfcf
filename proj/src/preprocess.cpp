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

#include "stancemix/preprocess.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "stancemix/errors.hpp"
#include "stancemix/util.hpp"

namespace stancemix {

namespace {

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\r':
        case U'\n':
        case U'\f':
        case U'\v':
        case 0x00A0:
        case 0x2028:
        case 0x2029:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_ascii_upper(char32_t cp) { return cp >= U'A' && cp <= U'Z'; }
bool is_ascii_lower(char32_t cp) { return cp >= U'a' && cp <= U'z'; }

// Letters for tokenization purposes: ASCII letters, Latin-1/Latin-Extended
// letters, and the major non-Latin letter blocks. Everything else that is
// not a digit, underscore or whitespace counts as punctuation (this covers
// emoji and symbol codepoints).
bool is_letter_cp(char32_t cp) {
    if (is_ascii_upper(cp) || is_ascii_lower(cp)) return true;
    if (cp >= 0x00C0 && cp <= 0x024F) return cp != 0x00D7 && cp != 0x00F7;
    if (cp >= 0x0370 && cp <= 0x1FFF) return true;
    if (cp >= 0x3040 && cp <= 0xD7FF) return true;
    return false;
}

bool is_word_cp(char32_t cp) {
    return is_letter_cp(cp) || is_ascii_digit(cp) || cp == U'_';
}

// Common ASCII emoticons, matched against whole whitespace-delimited chunks.
constexpr std::array<std::string_view, 34> kEmoticons{
    ":)",  ":(",  ":D",  ":P",  ":p",  ":O",  ":o",  ":|",  ":/",  ":\\", ":*",
    ";)",  ";(",  ";D",  ":-)", ":-(", ":-D", ":-P", ":-/", ":-|", ";-)", ":'(",
    ":')", "=)",  "=(",  "=D",  "<3",  "</3", "xD",  "XD",  "xd",  "^_^", "-_-",
    "T_T"};

std::size_t word_run_length(const std::vector<char32_t>& cps, std::size_t start) {
    std::size_t end = start;
    while (end < cps.size() && is_word_cp(cps[end])) ++end;
    return end - start;
}

void append_token(std::vector<std::string>& out, const std::vector<char32_t>& cps,
                  std::size_t begin, std::size_t end) {
    std::string s;
    for (std::size_t i = begin; i < end; ++i) utf8_encode(cps[i], s);
    out.push_back(std::move(s));
}

void tokenize_chunk(const std::vector<char32_t>& cps, std::vector<std::string>& out) {
    std::string chunk = utf8_encode(cps);
    if (is_url(chunk) || is_emoticon(chunk)) {
        out.push_back(std::move(chunk));
        return;
    }
    std::size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        if ((cp == U'#' || cp == U'@') && i + 1 < cps.size() && is_word_cp(cps[i + 1])) {
            std::size_t len = word_run_length(cps, i + 1);
            append_token(out, cps, i, i + 1 + len);
            i += 1 + len;
        } else if (is_word_cp(cp)) {
            std::size_t len = word_run_length(cps, i);
            append_token(out, cps, i, i + len);
            i += len;
        } else {
            // run of the same punctuation character stays one token
            std::size_t end = i + 1;
            while (end < cps.size() && cps[end] == cp) ++end;
            append_token(out, cps, i, end);
            i = end;
        }
    }
}

}  // namespace

bool is_hashtag(std::string_view token) {
    if (token.size() < 2 || token[0] != '#') return false;
    std::vector<char32_t> cps = utf8_decode(token.substr(1));
    return !cps.empty() && is_word_cp(cps[0]);
}

bool is_mention(std::string_view token) {
    if (token.size() < 2 || token[0] != '@') return false;
    std::vector<char32_t> cps = utf8_decode(token.substr(1));
    return !cps.empty() && is_word_cp(cps[0]);
}

bool is_url(std::string_view token) {
    std::string low = lower_ascii(token);
    return low.starts_with("http://") || low.starts_with("https://") || low.starts_with("www.");
}

bool is_emoticon(std::string_view token) {
    return std::find(kEmoticons.begin(), kEmoticons.end(), token) != kEmoticons.end();
}

bool is_punct_or_digit(std::string_view token) {
    if (token.empty()) return false;
    for (char32_t cp : utf8_decode(token)) {
        if (is_letter_cp(cp)) return false;
    }
    return true;
}

std::vector<std::string> tokenize(std::string_view raw_text) {
    std::vector<std::string> out;
    std::vector<char32_t> cps = utf8_decode(raw_text);
    std::size_t i = 0;
    while (i < cps.size()) {
        if (is_space_cp(cps[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < cps.size() && !is_space_cp(cps[end])) ++end;
        std::vector<char32_t> chunk(cps.begin() + static_cast<std::ptrdiff_t>(i),
                                    cps.begin() + static_cast<std::ptrdiff_t>(end));
        tokenize_chunk(chunk, out);
        i = end;
    }
    return out;
}

std::vector<std::string> decompose_hashtag(std::string_view token) {
    if (!is_hashtag(token)) {
        throw std::invalid_argument("not a hashtag: '" + std::string(token) + "'");
    }
    std::vector<char32_t> body = utf8_decode(token.substr(1));

    std::vector<std::string> words;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        bool boundary = false;
        if (i > start) {
            char32_t prev = body[i - 1];
            char32_t cur = body[i];
            if (is_ascii_lower(prev) && is_ascii_upper(cur)) {
                boundary = true;
            } else if (is_ascii_upper(prev) && is_ascii_upper(cur) && i + 1 < body.size() &&
                       is_ascii_lower(body[i + 1])) {
                // end of an acronym run: "PMBadlo" -> "PM" | "Badlo"
                boundary = true;
            } else if (is_ascii_digit(prev) != is_ascii_digit(cur) &&
                       (is_ascii_digit(prev) || is_ascii_digit(cur))) {
                boundary = true;
            }
        }
        if (body[i] == U'_') {
            if (i > start) {
                std::string w;
                for (std::size_t k = start; k < i; ++k) utf8_encode(body[k], w);
                words.push_back(std::move(w));
            }
            words.push_back("_");
            start = i + 1;
            continue;
        }
        if (boundary) {
            std::string w;
            for (std::size_t k = start; k < i; ++k) utf8_encode(body[k], w);
            words.push_back(std::move(w));
            start = i;
        }
    }
    if (start < body.size()) {
        std::string w;
        for (std::size_t k = start; k < body.size(); ++k) utf8_encode(body[k], w);
        words.push_back(std::move(w));
    }
    return words;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
    return load(std::vector<std::filesystem::path>{path});
}

StopwordList StopwordList::load(const std::vector<std::filesystem::path>& paths) {
    StopwordList list;
    std::uint64_t fp = kFnvOffset;
    for (const auto& path : paths) {
        std::string content = read_file(path);
        fp = fnv1a64(content, fp);
        for (std::string_view line : split_lines(content)) {
            if (line.empty() || line[0] == '#') continue;
            std::size_t end = line.find_last_not_of(" \t");
            std::size_t begin = line.find_first_not_of(" \t");
            if (begin == std::string_view::npos) continue;
            list.words_.insert(lower_ascii(line.substr(begin, end - begin + 1)));
        }
        if (!list.source_.empty()) list.source_ += ",";
        list.source_ += path.string();
    }
    if (list.words_.empty()) {
        throw ConfigError("stopword list is empty: " + list.source_);
    }
    list.fingerprint_ = fp;
    return list;
}

StopwordList StopwordList::from_words(std::set<std::string> words) {
    StopwordList list;
    std::uint64_t fp = kFnvOffset;
    for (const std::string& w : words) {
        std::string low = lower_ascii(w);
        fp = fnv1a64(low, fp);
        fp = fnv1a64("\n", fp);
        list.words_.insert(std::move(low));
    }
    list.source_ = "<inline>";
    list.fingerprint_ = fp;
    return list;
}

bool StopwordList::contains(std::string_view token) const {
    return words_.contains(lower_ascii(token));
}

std::vector<TokenAnnotation> preprocess_for_features(const std::vector<TokenAnnotation>& tokens,
                                                     const StopwordList& stopwords) {
    std::vector<TokenAnnotation> out;
    out.reserve(tokens.size());
    for (const TokenAnnotation& tok : tokens) {
        if (is_url(tok.surface) || is_mention(tok.surface)) continue;
        if (is_hashtag(tok.surface)) {
            for (const std::string& word : decompose_hashtag(tok.surface)) {
                std::string low = lower_ascii(word);
                if (stopwords.contains(low)) continue;
                out.push_back(TokenAnnotation{std::move(low), tok.tag});
            }
        } else {
            std::string low = lower_ascii(tok.surface);
            if (stopwords.contains(low)) continue;
            out.push_back(TokenAnnotation{std::move(low), tok.tag});
        }
    }
    return out;
}

}  // namespace stancemix
