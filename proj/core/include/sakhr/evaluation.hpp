#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sakhr/corpus.hpp"
#include "sakhr/ensemble.hpp"
#include "sakhr/learners.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/tfidf.hpp"

namespace sakhr {

// Positive = sarcastic (label 1).
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct MetricsReport {
  double accuracy = 0.0;
  double precision_sarcastic = 0.0;
  double recall_sarcastic = 0.0;
  double f1_sarcastic = 0.0;
  double f1_per_class[2] = {0.0, 0.0};  // [non-sarcastic, sarcastic]
  double macro_f1 = 0.0;
  // Human-readable notes for zero-denominator conventions (the value is
  // reported as 0 instead of failing).
  std::vector<std::string> degenerate_notes;
};

struct CvReport {
  std::string classifier_name;
  std::vector<double> per_fold_accuracy;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population STD over the folds
};

struct FoldIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

ConfusionMatrix confusion(const std::vector<int>& gold, const std::vector<int>& pred);

// 2PR/(P+R); 0 when P+R == 0.
double f1_score(double precision, double recall);

MetricsReport metrics(const ConfusionMatrix& cm);

// Stratified k-fold assignment: per class, a seeded shuffle dealt round-robin
// across folds, so each fold's class counts stay within one of proportional.
// Requires 2 <= k <= n and at least k members of each class.
std::vector<FoldIndices> kfold_split(std::size_t n, std::size_t k, const std::vector<int>& labels,
                                     std::uint64_t seed);

double fold_mean(const std::vector<double>& values);
double fold_std(const std::vector<double>& values);  // population (divide by k)

struct CvOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  PreprocessConfig preprocess;
  TfidfConfig tfidf;
};

// Per fold: preprocessing is applied per sample, the vocabulary and the
// model are fitted on the train split only, accuracy is scored on the test
// split. Returns per-fold accuracies plus mean and population STD.
using FoldPredictor = std::function<int(const SparseVector&)>;
using FoldTrainer = std::function<FoldPredictor(const std::vector<SparseVector>& train_vectors,
                                                const std::vector<int>& train_labels,
                                                std::size_t n_features, std::uint64_t fold_seed)>;

CvReport cross_validate_with(const FoldTrainer& trainer, std::string classifier_name,
                             const Dataset& dataset, const CvOptions& options);

CvReport cross_validate(const LearnerSpec& spec, const Dataset& dataset,
                        const CvOptions& options);

CvReport cross_validate_voting(std::vector<LearnerSpec> member_specs, const Dataset& dataset,
                               const CvOptions& options);

}  // namespace sakhr
