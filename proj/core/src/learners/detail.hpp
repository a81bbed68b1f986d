#pragma once

#include <vector>

#include "sakhr/learners.hpp"

// Per-kind fit/predict implementations. fit() in fit.cpp validates the
// shared preconditions and dispatches here; predict helpers assume the
// vector was already range-checked.
namespace sakhr::detail {

TrainedModel fit_linear_svm(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                            const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_sgd_hinge(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                           const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_rbf_svm(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                         const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_mnb(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_mlp(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_forest(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                        const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_knn(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features);
TrainedModel fit_adaboost(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                          const std::vector<int>& labels, std::size_t n_features);

int predict_linear(const LinearModelParams& params, const SparseVector& x);
int predict_rbf(const RbfSvmParams& params, const SparseVector& x);
int predict_nb(const NbParams& params, const SparseVector& x);
int predict_mlp(const MlpParams& params, const SparseVector& x);
int predict_forest(const ForestParams& params, const SparseVector& x);
int predict_knn(const KnnParams& params, const SparseVector& x);
int predict_adaboost(const AdaboostParams& params, const SparseVector& x);

// {0,1} -> {-1,+1}; sarcastic (1) maps to +1.
std::vector<int> to_signed_labels(const std::vector<int>& labels);

// Stream salt: keeps the random streams of different learner kinds
// independent even when they share one base seed.
std::uint64_t learner_stream_seed(const LearnerSpec& spec);

}  // namespace sakhr::detail
