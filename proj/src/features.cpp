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

#include "stancemix/features.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "stancemix/errors.hpp"
#include "stancemix/util.hpp"

namespace stancemix {

std::string serialize(const FeatureDescriptor& descriptor) {
    struct Visitor {
        std::string operator()(const CharGram& d) const { return "c\t" + d.gram; }
        std::string operator()(const WordGram& d) const {
            std::string out = "w\t";
            for (std::size_t i = 0; i < d.words.size(); ++i) {
                if (i > 0) out.push_back(' ');
                out += d.words[i];
            }
            return out;
        }
        std::string operator()(const SiToken& d) const {
            return "s\t" + std::string(to_string(d.tag)) + "\t" + d.token;
        }
    };
    return std::visit(Visitor{}, descriptor);
}

FeatureDescriptor deserialize_descriptor(std::string_view line) {
    if (line.size() < 2 || line[1] != '\t') {
        throw ConfigError("bad feature descriptor: '" + std::string(line) + "'");
    }
    std::string_view payload = line.substr(2);
    switch (line[0]) {
        case 'c':
            return CharGram{std::string(payload)};
        case 'w': {
            WordGram gram;
            std::size_t start = 0;
            while (start <= payload.size()) {
                std::size_t end = payload.find(' ', start);
                if (end == std::string_view::npos) {
                    gram.words.emplace_back(payload.substr(start));
                    break;
                }
                gram.words.emplace_back(payload.substr(start, end - start));
                start = end + 1;
            }
            return gram;
        }
        case 's': {
            std::size_t sep = payload.find('\t');
            if (sep == std::string_view::npos) {
                throw ConfigError("bad si descriptor: '" + std::string(line) + "'");
            }
            auto tag = parse_language_tag(payload.substr(0, sep));
            if (!tag) {
                throw ConfigError("bad si descriptor tag: '" + std::string(line) + "'");
            }
            return SiToken{std::string(payload.substr(sep + 1)), *tag};
        }
        default:
            throw ConfigError("unknown feature descriptor kind: '" + std::string(line) + "'");
    }
}

std::string_view to_string(CountMode mode) {
    return mode == CountMode::Occurrence ? "occurrence" : "document";
}

std::optional<CountMode> parse_count_mode(std::string_view s) {
    if (s == "occurrence") return CountMode::Occurrence;
    if (s == "document") return CountMode::Document;
    return std::nullopt;
}

std::string_view to_string(const FeatureFamilies& families) {
    if (families.chars && families.words && families.si) return "all";
    if (families.chars && !families.words && !families.si) return "char";
    if (!families.chars && families.words && !families.si) return "word";
    if (!families.chars && !families.words && families.si) return "si";
    return "custom";
}

std::optional<FeatureFamilies> parse_feature_families(std::string_view s) {
    if (s == "all") return FeatureFamilies{true, true, true};
    if (s == "char") return FeatureFamilies{true, false, false};
    if (s == "word") return FeatureFamilies{false, true, false};
    if (s == "si") return FeatureFamilies{false, false, true};
    return std::nullopt;
}

std::vector<PreprocessedTweet> preprocess_corpus(const Corpus& corpus,
                                                 const StopwordList& stopwords) {
    if (!corpus.has_tokens()) {
        throw ConfigError("feature extraction needs token-level language annotation");
    }
    std::vector<PreprocessedTweet> docs;
    docs.reserve(corpus.tweets.size());
    for (const Tweet& tweet : corpus.tweets) {
        docs.push_back(PreprocessedTweet{tweet.id, preprocess_for_features(tweet.tokens, stopwords),
                                         tweet.stance});
    }
    return docs;
}

namespace {

// Enumerates the character n-grams of one token (within-token, over Unicode
// scalar values), n in [n_min, n_max].
template <typename Fn>
void for_each_char_gram(const std::string& token, int n_min, int n_max, Fn&& fn) {
    std::vector<char32_t> cps = utf8_decode(token);
    int len = static_cast<int>(cps.size());
    for (int n = n_min; n <= n_max && n <= len; ++n) {
        for (int start = 0; start + n <= len; ++start) {
            std::string gram;
            for (int k = 0; k < n; ++k) utf8_encode(cps[static_cast<std::size_t>(start + k)], gram);
            fn(gram);
        }
    }
}

template <typename Fn>
void for_each_word_gram(const std::vector<TokenAnnotation>& tokens, int n_min, int n_max, Fn&& fn) {
    int len = static_cast<int>(tokens.size());
    for (int n = n_min; n <= n_max && n <= len; ++n) {
        for (int start = 0; start + n <= len; ++start) {
            std::string key;
            for (int k = 0; k < n; ++k) {
                if (k > 0) key.push_back(' ');
                key += tokens[static_cast<std::size_t>(start + k)].surface;
            }
            fn(key, n, start);
        }
    }
}

}  // namespace

std::set<FeatureDescriptor> build_char_ngrams(const std::vector<PreprocessedTweet>& docs,
                                              int n_min, int n_max, int min_count,
                                              CountMode mode) {
    std::unordered_map<std::string, long long> counts;
    for (const PreprocessedTweet& doc : docs) {
        std::unordered_set<std::string> seen;  // document mode
        for (const TokenAnnotation& tok : doc.tokens) {
            for_each_char_gram(tok.surface, n_min, n_max, [&](const std::string& gram) {
                if (mode == CountMode::Occurrence) {
                    counts[gram] += 1;
                } else {
                    seen.insert(gram);
                }
            });
        }
        for (const std::string& gram : seen) counts[gram] += 1;
    }
    std::set<FeatureDescriptor> out;
    for (const auto& [gram, count] : counts) {
        if (count >= min_count) out.insert(CharGram{gram});
    }
    return out;
}

std::set<FeatureDescriptor> build_word_ngrams(const std::vector<PreprocessedTweet>& docs,
                                              int n_min, int n_max, int min_count,
                                              CountMode mode) {
    std::unordered_map<std::string, long long> counts;
    for (const PreprocessedTweet& doc : docs) {
        std::unordered_set<std::string> seen;
        for_each_word_gram(doc.tokens, n_min, n_max, [&](const std::string& key, int, int) {
            if (mode == CountMode::Occurrence) {
                counts[key] += 1;
            } else {
                seen.insert(key);
            }
        });
        for (const std::string& key : seen) counts[key] += 1;
    }
    std::set<FeatureDescriptor> out;
    for (const auto& [key, count] : counts) {
        if (count >= min_count) {
            WordGram gram;
            std::size_t start = 0;
            while (start <= key.size()) {
                std::size_t end = key.find(' ', start);
                if (end == std::string::npos) {
                    gram.words.emplace_back(key.substr(start));
                    break;
                }
                gram.words.emplace_back(key.substr(start, end - start));
                start = end + 1;
            }
            out.insert(std::move(gram));
        }
    }
    return out;
}

namespace {

struct SiCounts {
    long long total = 0;
    std::array<long long, 3> per_label{};
};

// Token frequency tally, optionally restricted to one language tag.
// Occurrence mode counts every token occurrence; document mode counts each
// tweet at most once per token.
std::unordered_map<std::string, SiCounts> tally_tokens(const std::vector<PreprocessedTweet>& docs,
                                                       CountMode mode,
                                                       std::optional<LanguageTag> tag,
                                                       bool need_labels) {
    std::unordered_map<std::string, SiCounts> tally;
    for (const PreprocessedTweet& doc : docs) {
        if (need_labels && !doc.stance) {
            throw ConfigError("stance-indicative mining needs stance labels on every tweet");
        }
        std::unordered_set<std::string> seen;
        for (const TokenAnnotation& tok : doc.tokens) {
            if (tag && tok.tag != *tag) continue;
            if (mode == CountMode::Document && !seen.insert(tok.surface).second) continue;
            SiCounts& c = tally[tok.surface];
            c.total += 1;
            if (doc.stance) c.per_label[stance_index(*doc.stance)] += 1;
        }
    }
    return tally;
}

}  // namespace

double si_score(std::string_view token, const std::vector<PreprocessedTweet>& docs,
                CountMode mode, std::optional<LanguageTag> tag) {
    auto tally = tally_tokens(docs, mode, tag, /*need_labels=*/true);
    auto it = tally.find(std::string(token));
    if (it == tally.end() || it->second.total == 0) {
        throw std::invalid_argument("token does not occur in the corpus: '" + std::string(token) +
                                    "'");
    }
    long long best = *std::max_element(it->second.per_label.begin(), it->second.per_label.end());
    return static_cast<double>(best) / static_cast<double>(it->second.total);
}

std::set<FeatureDescriptor> build_si_tokens(const std::vector<PreprocessedTweet>& docs,
                                            double min_score, int min_count, CountMode mode) {
    std::set<FeatureDescriptor> out;
    for (LanguageTag tag : {LanguageTag::En, LanguageTag::Hi, LanguageTag::Rest}) {
        auto tally = tally_tokens(docs, mode, tag, /*need_labels=*/true);
        for (const auto& [token, counts] : tally) {
            if (counts.total < min_count) continue;
            long long best =
                *std::max_element(counts.per_label.begin(), counts.per_label.end());
            double score = static_cast<double>(best) / static_cast<double>(counts.total);
            if (score >= min_score) out.insert(SiToken{token, tag});
        }
    }
    return out;
}

std::uint64_t corpus_fingerprint(const std::vector<PreprocessedTweet>& docs) {
    std::vector<std::string_view> ids;
    ids.reserve(docs.size());
    for (const PreprocessedTweet& doc : docs) ids.push_back(doc.id);
    std::sort(ids.begin(), ids.end());
    std::uint64_t fp = kFnvOffset;
    for (std::string_view id : ids) {
        fp = fnv1a64(id, fp);
        fp = fnv1a64("\n", fp);
    }
    return fp;
}

FeatureSpace FeatureSpace::from_descriptors(std::vector<FeatureDescriptor> descriptors,
                                            FeatureThresholds thresholds, CountMode mode,
                                            std::uint64_t corpus_fp) {
    FeatureSpace space;
    space.descriptors_ = std::move(descriptors);
    std::sort(space.descriptors_.begin(), space.descriptors_.end(),
              [](const FeatureDescriptor& a, const FeatureDescriptor& b) {
                  return serialize(a) < serialize(b);
              });
    space.descriptors_.erase(std::unique(space.descriptors_.begin(), space.descriptors_.end()),
                             space.descriptors_.end());
    space.thresholds_ = thresholds;
    space.mode_ = mode;
    space.corpus_fingerprint_ = corpus_fp;

    std::uint64_t fp = kFnvOffset;
    fp = fnv1a64(to_hex(corpus_fp), fp);
    fp = fnv1a64(std::to_string(thresholds.char_min), fp);
    fp = fnv1a64(std::to_string(thresholds.word_min), fp);
    fp = fnv1a64(std::to_string(thresholds.si_min_count), fp);
    fp = fnv1a64(format_double_exact(thresholds.si_min_score), fp);
    for (std::uint32_t i = 0; i < space.descriptors_.size(); ++i) {
        std::string key = serialize(space.descriptors_[i]);
        fp = fnv1a64(key, fp);
        fp = fnv1a64("\n", fp);
        space.index_.emplace(std::move(key), i);
    }
    space.space_fingerprint_ = fp;
    return space;
}

std::optional<std::uint32_t> FeatureSpace::index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FeatureSpace fit_feature_space(const std::vector<PreprocessedTweet>& docs,
                               const FeatureFamilies& families,
                               const FeatureThresholds& thresholds, CountMode mode) {
    std::vector<FeatureDescriptor> descriptors;
    if (families.chars) {
        auto set = build_char_ngrams(docs, 1, 3, thresholds.char_min, mode);
        descriptors.insert(descriptors.end(), set.begin(), set.end());
    }
    if (families.words) {
        auto set = build_word_ngrams(docs, 1, 5, thresholds.word_min, mode);
        descriptors.insert(descriptors.end(), set.begin(), set.end());
    }
    if (families.si) {
        auto set = build_si_tokens(docs, thresholds.si_min_score, thresholds.si_min_count, mode);
        descriptors.insert(descriptors.end(), set.begin(), set.end());
    }
    return FeatureSpace::from_descriptors(std::move(descriptors), thresholds, mode,
                                          corpus_fingerprint(docs));
}

FeatureVector vectorize(const PreprocessedTweet& doc, const FeatureSpace& space) {
    std::unordered_set<std::uint32_t> active;
    auto probe = [&](const std::string& key) {
        if (auto idx = space.index_of(key)) active.insert(*idx);
    };
    for (const TokenAnnotation& tok : doc.tokens) {
        for_each_char_gram(tok.surface, 1, 3, [&](const std::string& gram) { probe("c\t" + gram); });
        probe("s\t" + std::string(to_string(tok.tag)) + "\t" + tok.surface);
    }
    for_each_word_gram(doc.tokens, 1, 5,
                       [&](const std::string& key, int, int) { probe("w\t" + key); });

    FeatureVector vec;
    vec.indices.assign(active.begin(), active.end());
    std::sort(vec.indices.begin(), vec.indices.end());
    return vec;
}

void FeatureSpace::save(std::ostream& out) const {
    out << "stancemix.featurespace.v1\n";
    out << "char_min=" << thresholds_.char_min << "\n";
    out << "word_min=" << thresholds_.word_min << "\n";
    out << "si_min_count=" << thresholds_.si_min_count << "\n";
    out << "si_min_score=" << format_double_exact(thresholds_.si_min_score) << "\n";
    out << "count_mode=" << to_string(mode_) << "\n";
    out << "corpus_fingerprint=" << to_hex(corpus_fingerprint_) << "\n";
    out << "descriptors=" << descriptors_.size() << "\n";
    for (const FeatureDescriptor& d : descriptors_) {
        out << serialize(d) << "\n";
    }
}

namespace {

std::string expect_kv(std::istream& in, std::string_view key) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("truncated feature space: expected " + std::string(key));
    }
    std::string prefix = std::string(key) + "=";
    if (!line.starts_with(prefix)) {
        throw ConfigError("bad feature space line, expected '" + std::string(key) + "=': " + line);
    }
    return line.substr(prefix.size());
}

}  // namespace

FeatureSpace FeatureSpace::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "stancemix.featurespace.v1") {
        throw ConfigError("not a stancemix feature space file");
    }
    FeatureThresholds thresholds;
    thresholds.char_min = std::stoi(expect_kv(in, "char_min"));
    thresholds.word_min = std::stoi(expect_kv(in, "word_min"));
    thresholds.si_min_count = std::stoi(expect_kv(in, "si_min_count"));
    thresholds.si_min_score = parse_double_exact(expect_kv(in, "si_min_score"));
    auto mode = parse_count_mode(expect_kv(in, "count_mode"));
    if (!mode) throw ConfigError("bad count_mode in feature space file");
    std::uint64_t corpus_fp = std::stoull(expect_kv(in, "corpus_fingerprint"), nullptr, 16);
    std::size_t n = std::stoull(expect_kv(in, "descriptors"));
    std::vector<FeatureDescriptor> descriptors;
    descriptors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) {
            throw ConfigError("truncated feature space: descriptor list");
        }
        descriptors.push_back(deserialize_descriptor(line));
    }
    return from_descriptors(std::move(descriptors), thresholds, *mode, corpus_fp);
}

}  // namespace stancemix
