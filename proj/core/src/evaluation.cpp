#include "sakhr/evaluation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>

#include "sakhr/errors.hpp"
#include "sakhr/rng.hpp"

namespace sakhr {

ConfusionMatrix confusion(const std::vector<int>& gold, const std::vector<int>& pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorKind::input, "confusion: gold has " + std::to_string(gold.size()) +
                                      " labels, predictions have " + std::to_string(pred.size()));
  }
  if (gold.empty()) {
    throw Error(ErrorKind::input, "confusion: no samples");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == 1) {
      ++(pred[i] == 1 ? cm.tp : cm.fn);
    } else {
      ++(pred[i] == 1 ? cm.fp : cm.tn);
    }
  }
  return cm;
}

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  if (denom == 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
  MetricsReport report;
  const auto total = cm.total();
  if (total == 0) {
    throw Error(ErrorKind::input, "metrics: empty confusion matrix");
  }
  report.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);

  auto ratio = [&report](std::size_t num, std::size_t denom, const char* what) {
    if (denom == 0) {
      report.degenerate_notes.push_back(std::string(what) + " undefined (0/0); reported as 0");
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(denom);
  };

  report.precision_sarcastic = ratio(cm.tp, cm.tp + cm.fp, "precision (sarcastic)");
  report.recall_sarcastic = ratio(cm.tp, cm.tp + cm.fn, "recall (sarcastic)");
  report.f1_sarcastic = f1_score(report.precision_sarcastic, report.recall_sarcastic);

  const double precision_neg = ratio(cm.tn, cm.tn + cm.fn, "precision (non-sarcastic)");
  const double recall_neg = ratio(cm.tn, cm.tn + cm.fp, "recall (non-sarcastic)");
  report.f1_per_class[0] = f1_score(precision_neg, recall_neg);
  report.f1_per_class[1] = report.f1_sarcastic;
  report.macro_f1 = (report.f1_per_class[0] + report.f1_per_class[1]) / 2.0;
  return report;
}

std::vector<FoldIndices> kfold_split(std::size_t n, std::size_t k, const std::vector<int>& labels,
                                     std::uint64_t seed) {
  if (labels.size() != n) {
    throw Error(ErrorKind::input, "kfold: labels length does not match n");
  }
  if (k < 2 || k > n) {
    throw Error(ErrorKind::fit,
                "kfold: k=" + std::to_string(k) + " outside [2, n=" + std::to_string(n) + "]");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw Error(ErrorKind::fit, "kfold: label outside {0,1} at index " + std::to_string(i));
    }
    by_class[labels[i]].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < k) {
      throw Error(ErrorKind::fit, "kfold: class " + std::to_string(c) + " has only " +
                                      std::to_string(by_class[c].size()) +
                                      " samples; stratified " + std::to_string(k) +
                                      "-fold needs at least " + std::to_string(k));
    }
  }

  std::vector<std::vector<std::size_t>> test_sets(k);
  for (int c = 0; c < 2; ++c) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(c) + 1));
    rng.shuffle(by_class[c]);
    for (std::size_t i = 0; i < by_class[c].size(); ++i) {
      test_sets[i % k].push_back(by_class[c][i]);
    }
  }

  std::vector<FoldIndices> folds(k);
  for (std::size_t f = 0; f < k; ++f) {
    auto& test = test_sets[f];
    std::sort(test.begin(), test.end());
    folds[f].test = test;
    for (std::size_t g = 0; g < k; ++g) {
      if (g == f) continue;
      folds[f].train.insert(folds[f].train.end(), test_sets[g].begin(), test_sets[g].end());
    }
    std::sort(folds[f].train.begin(), folds[f].train.end());
  }
  return folds;
}

double fold_mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double fold_std(const std::vector<double>& values) {
  // Identical fold scores must report exactly 0, not mean-rounding dust.
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end()) {
    return 0.0;
  }
  const double mean = fold_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

CvReport cross_validate_with(const FoldTrainer& trainer, std::string classifier_name,
                             const Dataset& dataset, const CvOptions& options) {
  const std::size_t n = dataset.size();
  const auto labels = dataset.labels();

  // Cleaning is per-sample (nothing is fitted), so it runs once up front.
  std::vector<TokenList> documents;
  documents.reserve(n);
  for (const auto& sample : dataset.samples) {
    documents.push_back(tokenize(clean(sample.text, options.preprocess)));
  }

  const auto folds = kfold_split(n, options.folds, labels, options.seed);

  CvReport report;
  report.classifier_name = std::move(classifier_name);
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const auto& fold = folds[f];
    std::vector<TokenList> train_docs;
    std::vector<int> train_labels;
    train_docs.reserve(fold.train.size());
    for (std::size_t i : fold.train) {
      train_docs.push_back(documents[i]);
      train_labels.push_back(labels[i]);
    }

    // The vocabulary is refit on the train split only; test-only tokens never
    // leak into it.
    const Vocabulary vocab = fit_vocabulary(train_docs, options.tfidf);
    std::vector<SparseVector> train_vectors;
    train_vectors.reserve(train_docs.size());
    for (const auto& doc : train_docs) {
      train_vectors.push_back(transform(doc, vocab, options.tfidf));
    }

    const std::uint64_t fold_seed = derive_seed(options.seed, f + 1);
    const FoldPredictor predictor = trainer(train_vectors, train_labels, vocab.size(), fold_seed);

    std::size_t correct = 0;
    for (std::size_t i : fold.test) {
      const SparseVector vec = transform(documents[i], vocab, options.tfidf);
      if (predictor(vec) == labels[i]) ++correct;
    }
    report.per_fold_accuracy.push_back(static_cast<double>(correct) /
                                       static_cast<double>(fold.test.size()));
  }

  report.mean_accuracy = fold_mean(report.per_fold_accuracy);
  report.std_accuracy = fold_std(report.per_fold_accuracy);
  return report;
}

CvReport cross_validate(const LearnerSpec& spec, const Dataset& dataset,
                        const CvOptions& options) {
  FoldTrainer trainer = [&spec](const std::vector<SparseVector>& vectors,
                                const std::vector<int>& labels, std::size_t n_features,
                                std::uint64_t fold_seed) -> FoldPredictor {
    LearnerSpec fold_spec = spec;
    fold_spec.seed = derive_seed(spec.seed, fold_seed);
    auto model = std::make_shared<TrainedModel>(fit(fold_spec, vectors, labels, n_features));
    return [model](const SparseVector& x) { return predict(*model, x); };
  };
  return cross_validate_with(trainer, std::string(learner_display_name(spec.kind)), dataset,
                             options);
}

CvReport cross_validate_voting(std::vector<LearnerSpec> member_specs, const Dataset& dataset,
                               const CvOptions& options) {
  FoldTrainer trainer = [specs = std::move(member_specs)](
                            const std::vector<SparseVector>& vectors,
                            const std::vector<int>& labels, std::size_t n_features,
                            std::uint64_t fold_seed) -> FoldPredictor {
    std::vector<LearnerSpec> fold_specs = specs;
    for (auto& spec : fold_specs) spec.seed = derive_seed(spec.seed, fold_seed);
    auto model =
        std::make_shared<VotingModel>(fit_voting(fold_specs, vectors, labels, n_features));
    return [model](const SparseVector& x) { return predict(*model, x); };
  };
  return cross_validate_with(trainer, "Voting", dataset, options);
}

}  // namespace sakhr
