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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stancemix {

// Tweet-level stance towards the target. The declaration order is also the
// fixed tie-break order used by the classifiers.
enum class StanceLabel { Favor, Against, None };

inline constexpr std::array<StanceLabel, 3> kStanceOrder{
    StanceLabel::Favor, StanceLabel::Against, StanceLabel::None};

std::string_view to_string(StanceLabel label);
std::optional<StanceLabel> parse_stance_label(std::string_view s);
inline constexpr std::size_t stance_index(StanceLabel label) {
    return static_cast<std::size_t>(label);
}

// Token-level language tag. Serialized forms are lowercase "en"/"hi"/"rest".
enum class LanguageTag { En, Hi, Rest };

std::string_view to_string(LanguageTag tag);
std::optional<LanguageTag> parse_language_tag(std::string_view s);

// A token paired with its language tag. Surfaces never contain whitespace.
struct TokenAnnotation {
    std::string surface;
    LanguageTag tag = LanguageTag::Rest;

    bool operator==(const TokenAnnotation&) const = default;
};

struct Tweet {
    std::string id;
    std::string raw_text;
    std::vector<TokenAnnotation> tokens;  // empty until a lang file is joined
    std::optional<StanceLabel> stance;

    bool operator==(const Tweet&) const = default;
};

struct Corpus {
    std::vector<Tweet> tweets;
    std::vector<std::string> provenance;

    bool has_tokens() const;
    bool has_stances() const;
};

// --- three-file on-disk format ------------------------------------------
//
// File 1 (text):   id line, one or more non-blank text lines, blank line.
// File 2 (lang):   id line, one "token<TAB>tag" line per token, blank line.
//                  The reader also tolerates runs of spaces as separator;
//                  the writer always emits a single TAB.
// File 3 (stance): id line, a FAVOR/AGAINST/NONE line, blank line.
//
// All files are UTF-8. The trailing blank line of the last record may be
// omitted. Parse errors carry the source name and line number.

struct TextRecord {
    std::string id;
    std::string text;
    bool operator==(const TextRecord&) const = default;
};

struct LangRecord {
    std::string id;
    std::vector<TokenAnnotation> tokens;
    bool operator==(const LangRecord&) const = default;
};

struct StanceRecord {
    std::string id;
    StanceLabel stance;
    bool operator==(const StanceRecord&) const = default;
};

std::vector<TextRecord> parse_text(std::string_view content, std::string_view source);
std::vector<LangRecord> parse_lang(std::string_view content, std::string_view source);
std::vector<StanceRecord> parse_stance(std::string_view content, std::string_view source);

std::vector<TextRecord> parse_text_file(const std::filesystem::path& path);
std::vector<LangRecord> parse_lang_file(const std::filesystem::path& path);
std::vector<StanceRecord> parse_stance_file(const std::filesystem::path& path);

struct LoadOptions {
    // When set, every tweet with tokens is checked against re-tokenization
    // of its raw text. Off by default: the published corpus was tokenized
    // and then manually corrected, so its token sequences need not match
    // the automatic tokenizer.
    bool check_retokenization = false;
};

// Joins the three files by tweet id. The text file is mandatory. Duplicate
// ids, ids present in an annotation file but missing from the text file, and
// ids missing from a supplied annotation file are all errors (annotation
// completeness is all-or-nothing).
Corpus load_corpus(const std::filesystem::path& text_path,
                   const std::optional<std::filesystem::path>& lang_path = std::nullopt,
                   const std::optional<std::filesystem::path>& stance_path = std::nullopt,
                   const LoadOptions& options = {});

std::string serialize_text(const Corpus& corpus);
std::string serialize_lang(const Corpus& corpus);
std::string serialize_stance(const Corpus& corpus);

// Writes text.txt / lang.txt / stance.txt under dir. Requires a fully
// annotated corpus.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

// Conventional file names inside a corpus directory.
inline constexpr std::string_view kTextFileName = "text.txt";
inline constexpr std::string_view kLangFileName = "lang.txt";
inline constexpr std::string_view kStanceFileName = "stance.txt";

struct StatsReport {
    std::size_t total = 0;
    std::array<std::size_t, 3> per_stance{};  // indexed by stance_index
    double avg_tokens = 0.0;
    double avg_en = 0.0;
    double avg_hi = 0.0;
    double avg_rest = 0.0;
};

// Corpus-level and tweet-level statistics. Averages are unrounded; display
// code rounds to one decimal.
StatsReport corpus_stats(const Corpus& corpus);

// Human-readable tables plus machine-readable key=value lines.
void print_stats(const StatsReport& stats, std::ostream& out);
std::string stats_key_values(const StatsReport& stats);

}  // namespace stancemix
