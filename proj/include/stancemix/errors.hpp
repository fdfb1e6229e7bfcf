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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stancemix {

// Malformed input file. Carries the source name and 1-based line number so
// the CLI can print actionable diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

// Invalid run configuration: missing lexicons, bad thresholds, unusable
// option combinations.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training cannot proceed (single-class data, empty training set, fold with
// no usable examples).
class TrainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A model was paired with a feature space it was not fitted on.
class ModelMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stancemix
