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
#include <string>
#include <string_view>
#include <vector>

namespace stancemix {

// FNV-1a, 64 bit. Used for corpus/feature-space fingerprints and for the
// stopword-list hash recorded in eval reports. Stable across platforms.
inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = kFnvOffset) {
    for (unsigned char c : bytes) {
        state ^= c;
        state *= kFnvPrime;
    }
    return state;
}

std::string to_hex(std::uint64_t value);

// Whole-file read; throws ConfigError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Splits on '\n'; a trailing newline does not produce an extra element.
// '\r' before the newline is stripped (tolerates CRLF input).
std::vector<std::string_view> split_lines(std::string_view text);

// ASCII-only case folding. The corpus is romanized, so this is all the
// pipeline needs; non-ASCII bytes pass through unchanged.
std::string lower_ascii(std::string_view s);

// Minimal UTF-8 decoding. Invalid byte sequences decode each offending byte
// as its Latin-1 value so that processing stays total and deterministic.
std::vector<char32_t> utf8_decode(std::string_view s);
void utf8_encode(char32_t cp, std::string& out);
std::string utf8_encode(const std::vector<char32_t>& cps);

// Round-trips doubles exactly through text (hex float format).
std::string format_double_exact(double v);
double parse_double_exact(std::string_view s);

}  // namespace stancemix
