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

#include "stancemix/selection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "stancemix/errors.hpp"

namespace stancemix {

ContingencyTable ContingencyTable::from_counts(const std::array<double, 3>& present,
                                               const std::array<double, 3>& class_totals) {
    ContingencyTable t;
    for (std::size_t c = 0; c < 3; ++c) {
        t.counts[0][c] = present[c];
        t.counts[1][c] = class_totals[c] - present[c];
        t.n += class_totals[c];
    }
    return t;
}

double chi_square_statistic(const ContingencyTable& table) {
    std::array<double, 2> row_total{};
    std::array<double, 3> col_total{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            double v = table.counts[r][c];
            if (v < 0.0) {
                throw std::invalid_argument("contingency table has a negative count");
            }
            row_total[r] += v;
            col_total[c] += v;
        }
    }
    double n = row_total[0] + row_total[1];
    if (n <= 0.0) return 0.0;
    double stat = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            double expected = row_total[r] * col_total[c] / n;
            if (expected <= 0.0) continue;
            double d = table.counts[r][c] - expected;
            stat += d * d / expected;
        }
    }
    return stat;
}

std::string_view to_string(ChiMode mode) {
    return mode == ChiMode::Multiclass ? "multiclass" : "per-class-max";
}

std::optional<ChiMode> parse_chi_mode(std::string_view s) {
    if (s == "multiclass") return ChiMode::Multiclass;
    if (s == "per-class-max") return ChiMode::PerClassMax;
    return std::nullopt;
}

namespace {

// 2x2 statistic for one class vs the rest, from the 2x3 margins.
double chi2_one_vs_rest(const std::array<double, 3>& present,
                        const std::array<double, 3>& class_totals, std::size_t cls) {
    double present_c = present[cls];
    double present_rest = 0.0, total_c = class_totals[cls], total_rest = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        if (c == cls) continue;
        present_rest += present[c];
        total_rest += class_totals[c];
    }
    double n = total_c + total_rest;
    if (n <= 0.0) return 0.0;
    std::array<std::array<double, 2>, 2> obs{
        std::array<double, 2>{present_c, present_rest},
        std::array<double, 2>{total_c - present_c, total_rest - present_rest}};
    std::array<double, 2> row{obs[0][0] + obs[0][1], obs[1][0] + obs[1][1]};
    std::array<double, 2> col{obs[0][0] + obs[1][0], obs[0][1] + obs[1][1]};
    double stat = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            double expected = row[r] * col[c] / n;
            if (expected <= 0.0) continue;
            double d = obs[r][c] - expected;
            stat += d * d / expected;
        }
    }
    return stat;
}

}  // namespace

SelectionResult select_top_k(const std::vector<FeatureVector>& vectors,
                             const std::vector<StanceLabel>& labels, const FeatureSpace& space,
                             std::size_t k, ChiMode mode) {
    if (vectors.size() != labels.size()) {
        throw std::invalid_argument("select_top_k: vectors and labels differ in length");
    }
    const std::size_t n_features = space.size();

    std::array<double, 3> class_totals{};
    for (StanceLabel label : labels) class_totals[stance_index(label)] += 1.0;

    // present[f][c] = number of class-c tweets containing feature f
    std::vector<std::array<double, 3>> present(n_features, std::array<double, 3>{});
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::size_t c = stance_index(labels[i]);
        for (std::uint32_t f : vectors[i].indices) {
            if (f >= n_features) {
                throw std::invalid_argument("select_top_k: vector index outside feature space");
            }
            present[f][c] += 1.0;
        }
    }

    std::vector<RankedFeature> ranking(n_features);
    std::vector<std::string> keys(n_features);
    for (std::uint32_t f = 0; f < n_features; ++f) {
        double chi2;
        if (mode == ChiMode::Multiclass) {
            chi2 = chi_square_statistic(ContingencyTable::from_counts(present[f], class_totals));
        } else {
            chi2 = 0.0;
            for (std::size_t c = 0; c < 3; ++c) {
                chi2 = std::max(chi2, chi2_one_vs_rest(present[f], class_totals, c));
            }
        }
        ranking[f] = RankedFeature{f, chi2};
        keys[f] = serialize(space.descriptors()[f]);
    }
    std::sort(ranking.begin(), ranking.end(), [&](const RankedFeature& a, const RankedFeature& b) {
        if (a.chi2 != b.chi2) return a.chi2 > b.chi2;
        return keys[a.old_index] < keys[b.old_index];
    });

    std::size_t kept = std::min(k, n_features);
    std::vector<FeatureDescriptor> selected;
    selected.reserve(kept);
    for (std::size_t r = 0; r < kept; ++r) {
        selected.push_back(space.descriptors()[ranking[r].old_index]);
    }

    SelectionResult result;
    result.reduced = FeatureSpace::from_descriptors(std::move(selected), space.thresholds(),
                                                    space.count_mode(), space.corpus_fingerprint());
    result.remap.assign(n_features, -1);
    for (std::uint32_t f = 0; f < n_features; ++f) {
        if (auto idx = result.reduced.index_of(keys[f])) {
            result.remap[f] = static_cast<std::int32_t>(*idx);
        }
    }
    result.ranking = std::move(ranking);
    return result;
}

FeatureVector remap_vector(const FeatureVector& vec, const std::vector<std::int32_t>& remap) {
    FeatureVector out;
    for (std::uint32_t idx : vec.indices) {
        std::int32_t mapped = remap.at(idx);
        if (mapped >= 0) out.indices.push_back(static_cast<std::uint32_t>(mapped));
    }
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

void write_selection_report(const SelectionResult& result, const FeatureSpace& original,
                            std::ostream& out) {
    char buf[32];
    for (std::size_t r = 0; r < result.ranking.size(); ++r) {
        const RankedFeature& rf = result.ranking[r];
        std::snprintf(buf, sizeof(buf), "%.6f", rf.chi2);
        out << (r + 1) << "\t" << buf << "\t" << serialize(original.descriptors()[rf.old_index])
            << "\n";
    }
}

}  // namespace stancemix
