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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "stancemix/corpus.hpp"
#include "stancemix/features.hpp"

namespace stancemix {

// 2x3 contingency of one feature against the stance classes: rows are
// (present, absent), columns follow kStanceOrder. counts sum to n.
struct ContingencyTable {
    std::array<std::array<double, 3>, 2> counts{};
    double n = 0.0;

    static ContingencyTable from_counts(const std::array<double, 3>& present,
                                        const std::array<double, 3>& class_totals);
};

// Pearson chi-square over the six cells, expected = row_total*col_total/n.
// Cells with zero expected count contribute nothing (a feature present or
// absent everywhere carries no class signal). Throws on negative counts.
double chi_square_statistic(const ContingencyTable& table);

// Ranking statistic: the single 2x3 multi-class statistic (default) or the
// max over classes of the 2x2 one-vs-rest statistics.
enum class ChiMode { Multiclass, PerClassMax };
std::string_view to_string(ChiMode mode);
std::optional<ChiMode> parse_chi_mode(std::string_view s);

struct RankedFeature {
    std::uint32_t old_index;
    double chi2;
};

struct SelectionResult {
    FeatureSpace reduced;
    // old index -> new index, -1 for dropped features.
    std::vector<std::int32_t> remap;
    // all features in rank order (selected prefix first), for the audit report
    std::vector<RankedFeature> ranking;
};

// Keeps the top min(k, N) features by chi-square, ties broken by ascending
// descriptor serialization. vectors and labels must be aligned.
SelectionResult select_top_k(const std::vector<FeatureVector>& vectors,
                             const std::vector<StanceLabel>& labels, const FeatureSpace& space,
                             std::size_t k = 500, ChiMode mode = ChiMode::Multiclass);

// Rewrites a vector fitted in the original space into the reduced space.
FeatureVector remap_vector(const FeatureVector& vec, const std::vector<std::int32_t>& remap);

// Tab-separated audit lines: rank, chi2, descriptor.
void write_selection_report(const SelectionResult& result, const FeatureSpace& original,
                            std::ostream& out);

}  // namespace stancemix
