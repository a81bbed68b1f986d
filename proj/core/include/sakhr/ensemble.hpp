#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sakhr/learners.hpp"

namespace sakhr {

enum class TieBreak {
  majority_class_prior,  // tie -> class with more training samples, then 0
  fixed_zero,            // tie -> 0
};

// Hard-voting combination of independently fitted base classifiers. With the
// default seven members a tie is impossible.
struct VotingModel {
  std::vector<TrainedModel> members;
  TieBreak tie_break = TieBreak::majority_class_prior;
  std::array<std::size_t, 2> training_class_counts{0, 0};
  std::size_t n_features = 0;
};

// Modal label of member_labels; permutation-invariant. Exact vote ties are
// resolved by tie_break against class_counts.
int hard_vote(const std::vector<int>& member_labels, TieBreak tie_break,
              const std::array<std::size_t, 2>& class_counts);

// Fits every member on the full training set. Per-member streams are salted
// by learner kind, so removing one member never changes another's fit.
// Requires at least two member specs.
VotingModel fit_voting(const std::vector<LearnerSpec>& specs,
                       const std::vector<SparseVector>& vectors, const std::vector<int>& labels,
                       std::size_t n_features, TieBreak tie_break = TieBreak::majority_class_prior);

int predict(const VotingModel& model, const SparseVector& vector);
std::vector<int> predict_all(const VotingModel& model, const std::vector<SparseVector>& vectors);

// The default member set: the seven base-classifier kinds, with the linear
// kernel representing the SVM slot (odd count, so voting never ties):
// svm_linear, mnb, sgd_hinge, mlp, random_forest, knn, adaboost.
std::vector<LearnerSpec> default_voting_members(const LearnerHyperparams& hp, std::uint64_t seed);

}  // namespace sakhr
