#include <algorithm>

#include "detail.hpp"
#include "sakhr/errors.hpp"

namespace sakhr {

double cosine_distance(const SparseVector& x, const SparseVector& z) {
  const double nx = x.norm();
  const double nz = z.norm();
  if (nx == 0.0 && nz == 0.0) return 0.0;
  if (nx == 0.0 || nz == 0.0) return 1.0;
  return 1.0 - x.dot(z) / (nx * nz);
}

int knn_vote(const std::vector<std::pair<double, std::size_t>>& neighbors,
             const std::vector<int>& labels) {
  if (neighbors.empty()) {
    throw Error(ErrorKind::input, "knn_vote: no neighbors supplied");
  }
  std::size_t votes1 = 0;
  for (const auto& [dist, idx] : neighbors) {
    votes1 += static_cast<std::size_t>(labels[idx]);
  }
  const std::size_t votes0 = neighbors.size() - votes1;
  if (votes1 > votes0) return 1;
  if (votes0 > votes1) return 0;
  return labels[neighbors.front().second];
}

namespace detail {

TrainedModel fit_knn(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.knn;
  if (cfg.k < 1) {
    throw Error(ErrorKind::fit, "knn: k must be >= 1");
  }
  if (static_cast<std::size_t>(cfg.k) > vectors.size()) {
    throw Error(ErrorKind::fit, "knn: k=" + std::to_string(cfg.k) + " exceeds training size " +
                                    std::to_string(vectors.size()));
  }

  KnnParams params;
  params.k = cfg.k;
  params.training_vectors = vectors;
  params.training_labels = labels;

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_knn(const KnnParams& params, const SparseVector& x) {
  std::vector<std::pair<double, std::size_t>> by_distance;
  by_distance.reserve(params.training_vectors.size());
  for (std::size_t i = 0; i < params.training_vectors.size(); ++i) {
    by_distance.emplace_back(cosine_distance(x, params.training_vectors[i]), i);
  }
  // Distance ties resolve to the lower training index.
  std::sort(by_distance.begin(), by_distance.end());
  by_distance.resize(static_cast<std::size_t>(params.k));
  return knn_vote(by_distance, params.training_labels);
}

}  // namespace detail
}  // namespace sakhr
