#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sakhr/optim.hpp"
#include "sakhr/tfidf.hpp"
#include "sakhr/tree.hpp"

namespace sakhr {

// The eight trainable classifiers. Enum order matches the report order:
// SVM-Linear, SVM-RBF, MNB, SGD, MLP, RF, KNN, AdaBoost.
enum class LearnerKind {
  svm_linear,
  svm_rbf,
  mnb,
  sgd_hinge,
  mlp,
  random_forest,
  knn,
  adaboost,
};

inline constexpr std::array<LearnerKind, 8> kAllLearnerKinds = {
    LearnerKind::svm_linear, LearnerKind::svm_rbf,       LearnerKind::mnb,
    LearnerKind::sgd_hinge,  LearnerKind::mlp,           LearnerKind::random_forest,
    LearnerKind::knn,        LearnerKind::adaboost,
};

std::string_view learner_id(LearnerKind kind);            // e.g. "svm_linear"
std::string_view learner_display_name(LearnerKind kind);  // e.g. "SVM-Linear"
// Accepts canonical ids plus the aliases "sgd" and "rf"; throws a config
// error otherwise.
LearnerKind learner_kind_from_id(std::string_view id);

// ---------------------------------------------------------------------------
// Hyperparameter blocks. Defaults: C = 1,
// RBF gamma = 2, hinge loss with a 10000-step budget for SGD, 20 logistic
// hidden units trained with Adam for the MLP, 300 trees for the forest.

struct LinearSvmConfig {
  double c = 1.0;
  int max_iter = 1000;  // epoch cap; stops earlier when the weights settle
  double tol = 1e-6;    // L2 weight-delta convergence threshold per epoch
};

struct SgdHingeConfig {
  double c = 1.0;
  int max_iter = 10000;  // total update steps
  // eta_t = 1/(lambda*(t0+t))
  std::int64_t t0 = 1;
};

struct RbfSvmConfig {
  double gamma = 2.0;
  double c = 1.0;
  int epochs = 200;
};

struct MlpConfig {
  int hidden_size = 20;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_epochs = 200;
  int batch_size = 0;  // 0 = min(200, n)
  // Stop when the epoch loss improves by less than tol for `patience`
  // consecutive epochs. tol <= 0 disables early stopping.
  double tol = 1e-4;
  int patience = 10;
};

struct ForestConfig {
  int n_trees = 300;
  bool bootstrap = true;
  // Features examined per split: max(1, floor(sqrt(V))).
};

struct KnnConfig {
  int k = 5;  // cosine distance over the TF-IDF vectors
};

struct NbConfig {
  double alpha = 1.0;  // Lidstone smoothing
};

struct AdaboostConfig {
  int n_rounds = 50;  // depth-1 stumps
};

struct LearnerHyperparams {
  LinearSvmConfig svm_linear;
  RbfSvmConfig svm_rbf;
  NbConfig mnb;
  SgdHingeConfig sgd_hinge;
  MlpConfig mlp;
  ForestConfig random_forest;
  KnnConfig knn;
  AdaboostConfig adaboost;
};

struct LearnerSpec {
  LearnerKind kind = LearnerKind::mlp;
  LearnerHyperparams hp;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Fitted parameter blocks.

struct LinearModelParams {
  std::vector<double> weights;  // length = vocabulary size
  double bias = 0.0;

  bool operator==(const LinearModelParams&) const = default;
};

struct RbfSvmParams {
  double gamma = 2.0;
  std::vector<double> support_coefficients;  // alpha_i * y_i, y in {-1,+1}
  std::vector<SparseVector> support_vectors;
  double bias = 0.0;

  bool operator==(const RbfSvmParams&) const = default;
};

struct NbParams {
  std::array<double, 2> class_log_prior{};
  // Per class, log p(token | class); exp sums to 1 over the vocabulary.
  std::array<std::vector<double>, 2> feature_log_likelihood;
  double alpha = 1.0;

  bool operator==(const NbParams&) const = default;
};

// Single hidden layer, logistic activations on both layers, trained with
// Adam on the binary cross-entropy. Parameters live in one flat vector so
// the optimizer state and finite-difference checks share the layout:
//   theta = [ W1 (V*H, row-major by feature) | b1 (H) | W2 (H) | b2 ].
struct MlpParams {
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;
  std::vector<double> theta;
  AdamState adam_state;

  std::size_t parameter_count() const { return input_size * hidden_size + 2 * hidden_size + 1; }
  std::span<double> w1() { return {theta.data(), input_size * hidden_size}; }
  std::span<const double> w1() const { return {theta.data(), input_size * hidden_size}; }
  std::span<double> b1() { return {theta.data() + input_size * hidden_size, hidden_size}; }
  std::span<const double> b1() const {
    return {theta.data() + input_size * hidden_size, hidden_size};
  }
  std::span<double> w2() {
    return {theta.data() + (input_size + 1) * hidden_size, hidden_size};
  }
  std::span<const double> w2() const {
    return {theta.data() + (input_size + 1) * hidden_size, hidden_size};
  }
  double& b2() { return theta.back(); }
  double b2() const { return theta.back(); }

  bool operator==(const MlpParams&) const = default;
};

// Majority vote over the trees; a 50/50 tie resolves to label 0.
struct ForestParams {
  std::vector<DecisionTree> trees;

  bool operator==(const ForestParams&) const = default;
};

struct KnnParams {
  int k = 5;
  std::vector<SparseVector> training_vectors;
  std::vector<int> training_labels;

  bool operator==(const KnnParams&) const = default;
};

// h(x) = polarity * (x[feature] > threshold ? +1 : -1), polarity in {-1,+1}.
struct Stump {
  std::size_t feature = 0;
  double threshold = 0.0;
  int polarity = 1;

  bool operator==(const Stump&) const = default;
};

struct AdaboostParams {
  std::vector<Stump> stumps;
  std::vector<double> stump_weights;

  bool operator==(const AdaboostParams&) const = default;
};

using LearnerParams = std::variant<LinearModelParams, RbfSvmParams, NbParams, MlpParams,
                                   ForestParams, KnnParams, AdaboostParams>;

struct TrainedModel {
  LearnerKind kind = LearnerKind::mlp;
  std::size_t n_features = 0;
  std::uint64_t seed = 0;
  LearnerHyperparams hp;  // configuration echo, serialized with the model
  LearnerParams params;
};

// ---------------------------------------------------------------------------
// Operations.

// Trains a model of spec.kind. Requires at least two samples, both classes
// present, every index < n_features, and (for KNN) k <= n. Deterministic
// given spec.seed.
TrainedModel fit(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                 const std::vector<int>& labels, std::size_t n_features);

// Throws an input error when the vector addresses indices >= n_features.
int predict(const TrainedModel& model, const SparseVector& vector);
std::vector<int> predict_all(const TrainedModel& model, const std::vector<SparseVector>& vectors);

// score_c = class_log_prior[c] + sum_i x_i * feature_log_likelihood[c][i].
// TF-IDF weights act as fractional event counts.
std::array<double, 2> nb_log_posterior(const NbParams& params, const SparseVector& vector);

// neighbors: (distance, training index) pairs sorted ascending by distance,
// ties by index. Majority label; a vote tie resolves to the single nearest
// neighbor's label.
int knn_vote(const std::vector<std::pair<double, std::size_t>>& neighbors,
             const std::vector<int>& labels);

// alpha = 0.5*ln((1-eps)/eps); eps clamped to [1e-10, 1-1e-10].
double adaboost_stump_weight(double epsilon);

// Cosine distance 1 - x.z/(|x||z|). Two all-zero vectors are at distance 0;
// a zero vector is at distance 1 from any non-zero vector.
double cosine_distance(const SparseVector& x, const SparseVector& z);

// Mean binary cross-entropy of the batch, and its analytic gradient in the
// flat theta layout. Exposed so gradient checks can drive them directly.
double mlp_loss(const MlpParams& params, const std::vector<SparseVector>& vectors,
                const std::vector<int>& labels);
std::vector<double> mlp_gradients(const MlpParams& params,
                                  const std::vector<SparseVector>& vectors,
                                  const std::vector<int>& labels);

}  // namespace sakhr
