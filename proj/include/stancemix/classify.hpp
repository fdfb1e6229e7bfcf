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
#include <variant>
#include <vector>

#include "stancemix/corpus.hpp"
#include "stancemix/features.hpp"

namespace stancemix {

enum class ModelKind { LinearSvm, RbfSvm, RandomForest };

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view s);

struct ModelConfig {
    ModelKind kind = ModelKind::LinearSvm;
    double c = 1.0;                   // SVM regularization
    std::optional<double> gamma;      // RBF width; nullopt = 1/dimension
    int trees = 100;                  // forest size
    int max_depth = 0;                // 0 = grow to purity
    std::uint64_t seed = 0;
    int epochs = 1000;                // linear SVM epoch cap
    double kkt_tol = 1e-3;            // SMO stopping tolerance
};

// exp(-gamma * ||x - y||^2) over binary vectors; the squared distance is the
// cardinality of the symmetric difference of the two index sets.
double rbf_kernel(const FeatureVector& x, const FeatureVector& y, double gamma);

// Packed-row variant used inside training. Throws on word-count mismatch.
double rbf_kernel_packed(const std::uint64_t* x, std::size_t x_words, const std::uint64_t* y,
                         std::size_t y_words, double gamma);

// --- fitted parameter blocks -------------------------------------------------

struct LinearSvmModel {
    // Per class, dim+1 weights; the last entry is the bias weight (inputs are
    // implicitly augmented with a constant 1 feature).
    std::array<std::vector<float>, 3> weights;
    std::array<bool, 3> trained{};
};

struct RbfSupport {
    std::uint32_t vector_index;  // into RbfSvmModel::support_vectors
    double coef;                 // alpha_i * y_i
};

struct RbfClassModel {
    std::vector<RbfSupport> support;
    double bias = 0.0;
    bool trained = false;
};

struct RbfSvmModel {
    std::vector<FeatureVector> support_vectors;
    std::array<RbfClassModel, 3> per_class;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 marks a leaf
    std::uint32_t left = 0;     // feature absent
    std::uint32_t right = 0;    // feature present
    StanceLabel leaf = StanceLabel::Favor;
};

struct Tree {
    std::vector<TreeNode> nodes;  // root at index 0
};

struct ForestModel {
    std::vector<Tree> trees;
};

// --- the trained model --------------------------------------------------------

class TrainedModel {
public:
    TrainedModel() = default;

    const ModelConfig& config() const { return config_; }
    std::size_t dim() const { return dim_; }
    double gamma_resolved() const { return gamma_resolved_; }
    std::uint64_t space_fingerprint() const { return space_fingerprint_; }

    // Per-class decision values in kStanceOrder: SVM margins, or the vote
    // fraction for the forest. Untrained classes get -infinity.
    std::array<double, 3> decision_values(const FeatureVector& vec) const;

    // Argmax of decision_values; exact ties resolve to the first label in
    // FAVOR < AGAINST < NONE order.
    StanceLabel predict(const FeatureVector& vec) const;

    void save(std::ostream& out) const;
    static TrainedModel load(std::istream& in);

    friend TrainedModel train(const ModelConfig&, const std::vector<FeatureVector>&,
                              const std::vector<StanceLabel>&, std::size_t, std::uint64_t);

private:
    ModelConfig config_;
    double gamma_resolved_ = 0.0;
    std::size_t dim_ = 0;
    std::uint64_t space_fingerprint_ = 0;
    std::variant<LinearSvmModel, RbfSvmModel, ForestModel> impl_;
};

// Trains one model on vectors from a feature space of the given dimension.
// Requires at least two distinct labels and a non-empty training set.
TrainedModel train(const ModelConfig& config, const std::vector<FeatureVector>& vectors,
                   const std::vector<StanceLabel>& labels, std::size_t dim,
                   std::uint64_t space_fingerprint);

// Feature space (selection already applied) plus the model fitted on it,
// persisted together so predictions can never mix spaces.
struct ModelBundle {
    FeatureSpace space;
    TrainedModel model;

    void save(std::ostream& out) const;
    // Throws ModelMismatchError when the model was not fitted on the bundled
    // space.
    static ModelBundle load(std::istream& in);

    StanceLabel predict(const PreprocessedTweet& doc) const;
};

}  // namespace stancemix
