#include "sakhr/ensemble.hpp"

#include <string>

#include "sakhr/errors.hpp"

namespace sakhr {

int hard_vote(const std::vector<int>& member_labels, TieBreak tie_break,
              const std::array<std::size_t, 2>& class_counts) {
  if (member_labels.empty()) {
    throw Error(ErrorKind::input, "hard_vote: no member labels supplied");
  }
  std::size_t votes1 = 0;
  for (int label : member_labels) votes1 += static_cast<std::size_t>(label);
  const std::size_t votes0 = member_labels.size() - votes1;
  if (votes1 > votes0) return 1;
  if (votes0 > votes1) return 0;
  if (tie_break == TieBreak::fixed_zero) return 0;
  return class_counts[1] > class_counts[0] ? 1 : 0;
}

VotingModel fit_voting(const std::vector<LearnerSpec>& specs,
                       const std::vector<SparseVector>& vectors, const std::vector<int>& labels,
                       std::size_t n_features, TieBreak tie_break) {
  if (specs.size() < 2) {
    throw Error(ErrorKind::fit, "voting: need at least 2 member classifiers, got " +
                                    std::to_string(specs.size()));
  }

  VotingModel model;
  model.tie_break = tie_break;
  model.n_features = n_features;
  for (int y : labels) {
    if (y == 0 || y == 1) ++model.training_class_counts[y];
  }

  model.members.reserve(specs.size());
  for (const auto& spec : specs) {
    try {
      model.members.push_back(fit(spec, vectors, labels, n_features));
    } catch (const Error& e) {
      throw Error(e.kind(), "voting member " + std::string(learner_id(spec.kind)) + ": " +
                                e.what());
    }
  }
  return model;
}

int predict(const VotingModel& model, const SparseVector& vector) {
  std::vector<int> member_labels;
  member_labels.reserve(model.members.size());
  for (const auto& member : model.members) {
    member_labels.push_back(predict(member, vector));
  }
  return hard_vote(member_labels, model.tie_break, model.training_class_counts);
}

std::vector<int> predict_all(const VotingModel& model, const std::vector<SparseVector>& vectors) {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(predict(model, v));
  return out;
}

std::vector<LearnerSpec> default_voting_members(const LearnerHyperparams& hp, std::uint64_t seed) {
  std::vector<LearnerSpec> specs;
  for (LearnerKind kind :
       {LearnerKind::svm_linear, LearnerKind::mnb, LearnerKind::sgd_hinge, LearnerKind::mlp,
        LearnerKind::random_forest, LearnerKind::knn, LearnerKind::adaboost}) {
    specs.push_back(LearnerSpec{kind, hp, seed});
  }
  return specs;
}

}  // namespace sakhr
