#include <algorithm>
#include <string>

#include "detail.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/rng.hpp"

namespace sakhr {

std::string_view learner_id(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::svm_linear: return "svm_linear";
    case LearnerKind::svm_rbf: return "svm_rbf";
    case LearnerKind::mnb: return "mnb";
    case LearnerKind::sgd_hinge: return "sgd_hinge";
    case LearnerKind::mlp: return "mlp";
    case LearnerKind::random_forest: return "random_forest";
    case LearnerKind::knn: return "knn";
    case LearnerKind::adaboost: return "adaboost";
  }
  return "unknown";
}

std::string_view learner_display_name(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::svm_linear: return "SVM-Linear";
    case LearnerKind::svm_rbf: return "SVM-RBF";
    case LearnerKind::mnb: return "MNB";
    case LearnerKind::sgd_hinge: return "SGD";
    case LearnerKind::mlp: return "MLP";
    case LearnerKind::random_forest: return "RF";
    case LearnerKind::knn: return "KNN";
    case LearnerKind::adaboost: return "AdaBoost";
  }
  return "unknown";
}

LearnerKind learner_kind_from_id(std::string_view id) {
  for (LearnerKind kind : kAllLearnerKinds) {
    if (id == learner_id(kind)) return kind;
  }
  if (id == "sgd") return LearnerKind::sgd_hinge;
  if (id == "rf") return LearnerKind::random_forest;
  throw Error(ErrorKind::config, "unknown classifier '" + std::string(id) + "'");
}

namespace detail {

std::vector<int> to_signed_labels(const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int y : labels) out.push_back(y == 1 ? 1 : -1);
  return out;
}

std::uint64_t learner_stream_seed(const LearnerSpec& spec) {
  return derive_seed(spec.seed, static_cast<std::uint64_t>(spec.kind) + 1);
}

}  // namespace detail

TrainedModel fit(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                 const std::vector<int>& labels, std::size_t n_features) {
  if (vectors.size() != labels.size()) {
    throw Error(ErrorKind::fit, "fit: got " + std::to_string(vectors.size()) + " vectors but " +
                                    std::to_string(labels.size()) + " labels");
  }
  if (vectors.size() < 2) {
    throw Error(ErrorKind::fit, "fit: need at least 2 training samples");
  }
  bool has[2] = {false, false};
  for (int y : labels) {
    if (y != 0 && y != 1) {
      throw Error(ErrorKind::fit, "fit: label " + std::to_string(y) + " outside {0,1}");
    }
    has[y] = true;
  }
  if (!has[0] || !has[1]) {
    throw Error(ErrorKind::fit, "fit: training set contains a single class");
  }
  for (const auto& v : vectors) {
    if (v.index_bound() > n_features) {
      throw Error(ErrorKind::fit, "fit: feature index " + std::to_string(v.index_bound() - 1) +
                                      " out of range (V=" + std::to_string(n_features) + ")");
    }
  }

  switch (spec.kind) {
    case LearnerKind::svm_linear: return detail::fit_linear_svm(spec, vectors, labels, n_features);
    case LearnerKind::svm_rbf: return detail::fit_rbf_svm(spec, vectors, labels, n_features);
    case LearnerKind::mnb: return detail::fit_mnb(spec, vectors, labels, n_features);
    case LearnerKind::sgd_hinge: return detail::fit_sgd_hinge(spec, vectors, labels, n_features);
    case LearnerKind::mlp: return detail::fit_mlp(spec, vectors, labels, n_features);
    case LearnerKind::random_forest: return detail::fit_forest(spec, vectors, labels, n_features);
    case LearnerKind::knn: return detail::fit_knn(spec, vectors, labels, n_features);
    case LearnerKind::adaboost: return detail::fit_adaboost(spec, vectors, labels, n_features);
  }
  throw Error(ErrorKind::fit, "fit: unknown learner kind");
}

int predict(const TrainedModel& model, const SparseVector& vector) {
  if (vector.index_bound() > model.n_features) {
    throw Error(ErrorKind::input,
                "predict: feature index " + std::to_string(vector.index_bound() - 1) +
                    " out of range (V=" + std::to_string(model.n_features) + ")");
  }
  return std::visit(
      [&](const auto& params) -> int {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, LinearModelParams>) {
          return detail::predict_linear(params, vector);
        } else if constexpr (std::is_same_v<P, RbfSvmParams>) {
          return detail::predict_rbf(params, vector);
        } else if constexpr (std::is_same_v<P, NbParams>) {
          return detail::predict_nb(params, vector);
        } else if constexpr (std::is_same_v<P, MlpParams>) {
          return detail::predict_mlp(params, vector);
        } else if constexpr (std::is_same_v<P, ForestParams>) {
          return detail::predict_forest(params, vector);
        } else if constexpr (std::is_same_v<P, KnnParams>) {
          return detail::predict_knn(params, vector);
        } else {
          return detail::predict_adaboost(params, vector);
        }
      },
      model.params);
}

std::vector<int> predict_all(const TrainedModel& model, const std::vector<SparseVector>& vectors) {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(predict(model, v));
  return out;
}

}  // namespace sakhr
