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

#include "stancemix/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stancemix/errors.hpp"
#include "stancemix/preprocess.hpp"
#include "stancemix/util.hpp"

namespace stancemix {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool has_whitespace(std::string_view s) {
    return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}

// Shared record scanner: records are "id line, body lines, blank line".
// Calls on_record(id, body_lines, id_line_number) per record.
template <typename Fn>
void scan_records(std::string_view content, std::string_view source, Fn&& on_record) {
    std::vector<std::string_view> lines = split_lines(content);
    std::size_t i = 0;
    while (i < lines.size()) {
        if (is_blank(lines[i])) {  // stray blank lines between records
            ++i;
            continue;
        }
        std::size_t id_line = i + 1;
        std::string_view id = lines[i];
        if (has_whitespace(id)) {
            throw ParseError(std::string(source), id_line,
                             "id line contains whitespace: '" + std::string(id) + "'");
        }
        ++i;
        std::vector<std::string_view> body;
        while (i < lines.size() && !is_blank(lines[i])) {
            body.push_back(lines[i]);
            ++i;
        }
        if (body.empty()) {
            throw ParseError(std::string(source), id_line + 1,
                             "record '" + std::string(id) + "' has no body lines");
        }
        on_record(id, body, id_line);
        ++i;  // skip the blank separator (may be past the end)
    }
}

}  // namespace

std::string_view to_string(StanceLabel label) {
    switch (label) {
        case StanceLabel::Favor: return "FAVOR";
        case StanceLabel::Against: return "AGAINST";
        case StanceLabel::None: return "NONE";
    }
    return "";
}

std::optional<StanceLabel> parse_stance_label(std::string_view s) {
    if (s == "FAVOR") return StanceLabel::Favor;
    if (s == "AGAINST") return StanceLabel::Against;
    if (s == "NONE") return StanceLabel::None;
    return std::nullopt;
}

std::string_view to_string(LanguageTag tag) {
    switch (tag) {
        case LanguageTag::En: return "en";
        case LanguageTag::Hi: return "hi";
        case LanguageTag::Rest: return "rest";
    }
    return "";
}

std::optional<LanguageTag> parse_language_tag(std::string_view s) {
    if (s == "en") return LanguageTag::En;
    if (s == "hi") return LanguageTag::Hi;
    if (s == "rest") return LanguageTag::Rest;
    return std::nullopt;
}

bool Corpus::has_tokens() const {
    return !tweets.empty() &&
           std::all_of(tweets.begin(), tweets.end(),
                       [](const Tweet& t) { return !t.tokens.empty(); });
}

bool Corpus::has_stances() const {
    return !tweets.empty() &&
           std::all_of(tweets.begin(), tweets.end(),
                       [](const Tweet& t) { return t.stance.has_value(); });
}

std::vector<TextRecord> parse_text(std::string_view content, std::string_view source) {
    std::vector<TextRecord> records;
    scan_records(content, source, [&](std::string_view id, const std::vector<std::string_view>& body,
                                      std::size_t) {
        std::string text;
        for (std::size_t k = 0; k < body.size(); ++k) {
            if (k > 0) text.push_back('\n');
            text.append(body[k]);
        }
        records.push_back(TextRecord{std::string(id), std::move(text)});
    });
    return records;
}

std::vector<LangRecord> parse_lang(std::string_view content, std::string_view source) {
    std::vector<LangRecord> records;
    scan_records(content, source, [&](std::string_view id, const std::vector<std::string_view>& body,
                                      std::size_t id_line) {
        LangRecord rec;
        rec.id = std::string(id);
        for (std::size_t k = 0; k < body.size(); ++k) {
            std::size_t line_no = id_line + 1 + k;
            std::string_view line = body[k];
            std::size_t sep = line.find_first_of(" \t");
            if (sep == std::string_view::npos || sep == 0) {
                throw ParseError(std::string(source), line_no,
                                 "expected 'token<TAB>tag', got '" + std::string(line) + "'");
            }
            std::string_view token = line.substr(0, sep);
            std::size_t tag_start = line.find_first_not_of(" \t", sep);
            if (tag_start == std::string_view::npos) {
                throw ParseError(std::string(source), line_no, "missing language tag");
            }
            std::string_view tag_str = line.substr(tag_start);
            auto tag = parse_language_tag(tag_str);
            if (!tag) {
                throw ParseError(std::string(source), line_no,
                                 "unknown language tag '" + std::string(tag_str) + "'");
            }
            rec.tokens.push_back(TokenAnnotation{std::string(token), *tag});
        }
        records.push_back(std::move(rec));
    });
    return records;
}

std::vector<StanceRecord> parse_stance(std::string_view content, std::string_view source) {
    std::vector<StanceRecord> records;
    scan_records(content, source, [&](std::string_view id, const std::vector<std::string_view>& body,
                                      std::size_t id_line) {
        if (body.size() != 1) {
            throw ParseError(std::string(source), id_line + 2,
                             "stance record '" + std::string(id) + "' must have exactly one label line");
        }
        auto label = parse_stance_label(body[0]);
        if (!label) {
            throw ParseError(std::string(source), id_line + 1,
                             "unknown stance label '" + std::string(body[0]) + "'");
        }
        records.push_back(StanceRecord{std::string(id), *label});
    });
    return records;
}

std::vector<TextRecord> parse_text_file(const std::filesystem::path& path) {
    return parse_text(read_file(path), path.string());
}

std::vector<LangRecord> parse_lang_file(const std::filesystem::path& path) {
    return parse_lang(read_file(path), path.string());
}

std::vector<StanceRecord> parse_stance_file(const std::filesystem::path& path) {
    return parse_stance(read_file(path), path.string());
}

Corpus load_corpus(const std::filesystem::path& text_path,
                   const std::optional<std::filesystem::path>& lang_path,
                   const std::optional<std::filesystem::path>& stance_path,
                   const LoadOptions& options) {
    Corpus corpus;
    corpus.provenance.push_back(text_path.string());

    std::unordered_map<std::string, std::size_t> by_id;
    for (TextRecord& rec : parse_text_file(text_path)) {
        if (by_id.contains(rec.id)) {
            throw ParseError(text_path.string(), 0, "duplicate tweet id '" + rec.id + "'");
        }
        by_id.emplace(rec.id, corpus.tweets.size());
        corpus.tweets.push_back(Tweet{std::move(rec.id), std::move(rec.text), {}, std::nullopt});
    }

    if (lang_path) {
        corpus.provenance.push_back(lang_path->string());
        std::unordered_set<std::string> seen;
        for (LangRecord& rec : parse_lang_file(*lang_path)) {
            auto it = by_id.find(rec.id);
            if (it == by_id.end()) {
                throw ParseError(lang_path->string(), 0,
                                 "id '" + rec.id + "' not present in text file");
            }
            if (!seen.insert(rec.id).second) {
                throw ParseError(lang_path->string(), 0, "duplicate tweet id '" + rec.id + "'");
            }
            corpus.tweets[it->second].tokens = std::move(rec.tokens);
        }
        for (const Tweet& t : corpus.tweets) {
            if (t.tokens.empty()) {
                throw ParseError(lang_path->string(), 0,
                                 "id '" + t.id + "' has no language annotation");
            }
        }
        if (options.check_retokenization) {
            for (const Tweet& t : corpus.tweets) {
                std::vector<std::string> retok = tokenize(t.raw_text);
                bool same = retok.size() == t.tokens.size();
                for (std::size_t k = 0; same && k < retok.size(); ++k) {
                    same = retok[k] == t.tokens[k].surface;
                }
                if (!same) {
                    throw ParseError(lang_path->string(), 0,
                                     "id '" + t.id +
                                         "': annotated tokens disagree with re-tokenized text");
                }
            }
        }
    }

    if (stance_path) {
        corpus.provenance.push_back(stance_path->string());
        std::unordered_set<std::string> seen;
        for (const StanceRecord& rec : parse_stance_file(*stance_path)) {
            auto it = by_id.find(rec.id);
            if (it == by_id.end()) {
                throw ParseError(stance_path->string(), 0,
                                 "id '" + rec.id + "' not present in text file");
            }
            if (!seen.insert(rec.id).second) {
                throw ParseError(stance_path->string(), 0, "duplicate tweet id '" + rec.id + "'");
            }
            corpus.tweets[it->second].stance = rec.stance;
        }
        for (const Tweet& t : corpus.tweets) {
            if (!t.stance) {
                throw ParseError(stance_path->string(), 0,
                                 "id '" + t.id + "' has no stance annotation");
            }
        }
    }

    return corpus;
}

std::string serialize_text(const Corpus& corpus) {
    std::string out;
    for (const Tweet& t : corpus.tweets) {
        out += t.id;
        out.push_back('\n');
        out += t.raw_text;
        out += "\n\n";
    }
    return out;
}

std::string serialize_lang(const Corpus& corpus) {
    std::string out;
    for (const Tweet& t : corpus.tweets) {
        out += t.id;
        out.push_back('\n');
        for (const TokenAnnotation& tok : t.tokens) {
            out += tok.surface;
            out.push_back('\t');
            out += to_string(tok.tag);
            out.push_back('\n');
        }
        out.push_back('\n');
    }
    return out;
}

std::string serialize_stance(const Corpus& corpus) {
    std::string out;
    for (const Tweet& t : corpus.tweets) {
        out += t.id;
        out.push_back('\n');
        out += to_string(*t.stance);
        out += "\n\n";
    }
    return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
    if (!corpus.tweets.empty() && (!corpus.has_tokens() || !corpus.has_stances())) {
        throw ConfigError("write_corpus requires a fully annotated corpus");
    }
    std::filesystem::create_directories(dir);
    write_file(dir / kTextFileName, serialize_text(corpus));
    write_file(dir / kLangFileName, serialize_lang(corpus));
    write_file(dir / kStanceFileName, serialize_stance(corpus));
}

StatsReport corpus_stats(const Corpus& corpus) {
    StatsReport stats;
    stats.total = corpus.tweets.size();
    if (stats.total == 0) return stats;

    std::size_t tokens = 0, en = 0, hi = 0, rest = 0;
    for (const Tweet& t : corpus.tweets) {
        if (t.stance) stats.per_stance[stance_index(*t.stance)] += 1;
        tokens += t.tokens.size();
        for (const TokenAnnotation& tok : t.tokens) {
            switch (tok.tag) {
                case LanguageTag::En: ++en; break;
                case LanguageTag::Hi: ++hi; break;
                case LanguageTag::Rest: ++rest; break;
            }
        }
    }
    double n = static_cast<double>(stats.total);
    stats.avg_tokens = static_cast<double>(tokens) / n;
    stats.avg_en = static_cast<double>(en) / n;
    stats.avg_hi = static_cast<double>(hi) / n;
    stats.avg_rest = static_cast<double>(rest) / n;
    return stats;
}

namespace {

std::string round1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return std::string(buf);
}

}  // namespace

void print_stats(const StatsReport& stats, std::ostream& out) {
    out << "Corpus level statistics\n";
    out << "  Total tweets    " << stats.total << "\n";
    out << "  Tweets in favor " << stats.per_stance[stance_index(StanceLabel::Favor)] << "\n";
    out << "  Tweets against  " << stats.per_stance[stance_index(StanceLabel::Against)] << "\n";
    out << "  Neutral tweets  " << stats.per_stance[stance_index(StanceLabel::None)] << "\n";
    out << "Tweet level statistics\n";
    out << "  Avg. tokens      " << round1(stats.avg_tokens) << "\n";
    out << "  Avg. en tokens   " << round1(stats.avg_en) << "\n";
    out << "  Avg. hi tokens   " << round1(stats.avg_hi) << "\n";
    out << "  Avg. rest tokens " << round1(stats.avg_rest) << "\n";
}

std::string stats_key_values(const StatsReport& stats) {
    std::ostringstream out;
    out << "total=" << stats.total << "\n";
    out << "favor=" << stats.per_stance[stance_index(StanceLabel::Favor)] << "\n";
    out << "against=" << stats.per_stance[stance_index(StanceLabel::Against)] << "\n";
    out << "none=" << stats.per_stance[stance_index(StanceLabel::None)] << "\n";
    out << "avg_tokens=" << round1(stats.avg_tokens) << "\n";
    out << "avg_en=" << round1(stats.avg_en) << "\n";
    out << "avg_hi=" << round1(stats.avg_hi) << "\n";
    out << "avg_rest=" << round1(stats.avg_rest) << "\n";
    return out.str();
}

}  // namespace stancemix
