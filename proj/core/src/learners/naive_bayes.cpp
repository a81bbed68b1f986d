#include <cmath>

#include "detail.hpp"
#include "sakhr/errors.hpp"

namespace sakhr {

std::array<double, 2> nb_log_posterior(const NbParams& params, const SparseVector& vector) {
  std::array<double, 2> scores = params.class_log_prior;
  for (const auto& e : vector.entries) {
    scores[0] += e.weight * params.feature_log_likelihood[0][e.index];
    scores[1] += e.weight * params.feature_log_likelihood[1][e.index];
  }
  return scores;
}

namespace detail {

// Multinomial NB over TF-IDF weights: fractional weights act as event
// counts, Lidstone-smoothed by alpha.
TrainedModel fit_mnb(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features) {
  const double alpha = spec.hp.mnb.alpha;
  if (alpha <= 0.0) {
    throw Error(ErrorKind::fit, "mnb: smoothing alpha must be > 0");
  }

  NbParams params;
  params.alpha = alpha;
  params.feature_log_likelihood[0].assign(n_features, 0.0);
  params.feature_log_likelihood[1].assign(n_features, 0.0);

  std::array<std::vector<double>, 2> feature_weight;
  feature_weight[0].assign(n_features, 0.0);
  feature_weight[1].assign(n_features, 0.0);
  std::array<double, 2> class_weight{0.0, 0.0};
  std::array<std::size_t, 2> class_count{0, 0};

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const int c = labels[i];
    ++class_count[c];
    for (const auto& e : vectors[i].entries) {
      feature_weight[c][e.index] += e.weight;
      class_weight[c] += e.weight;
    }
  }

  const auto n = static_cast<double>(vectors.size());
  const auto v = static_cast<double>(n_features);
  for (int c = 0; c < 2; ++c) {
    params.class_log_prior[c] = std::log(static_cast<double>(class_count[c]) / n);
    const double denom = class_weight[c] + alpha * v;
    for (std::size_t j = 0; j < n_features; ++j) {
      params.feature_log_likelihood[c][j] = std::log((feature_weight[c][j] + alpha) / denom);
    }
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_nb(const NbParams& params, const SparseVector& x) {
  const auto scores = nb_log_posterior(params, x);
  return scores[1] > scores[0] ? 1 : 0;
}

}  // namespace detail
}  // namespace sakhr
