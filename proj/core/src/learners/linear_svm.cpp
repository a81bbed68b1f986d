#include <cmath>
#include <numeric>

#include "detail.hpp"
#include "sakhr/optim.hpp"
#include "sakhr/rng.hpp"

namespace sakhr::detail {

namespace {

// lambda = 1/(C*n): the Pegasos regularizer matching a C-parameterized SVM.
double pegasos_lambda(double c, std::size_t n) {
  return 1.0 / (c * static_cast<double>(n));
}

}  // namespace

TrainedModel fit_linear_svm(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                            const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.svm_linear;
  const auto y = to_signed_labels(labels);
  const std::size_t n = vectors.size();
  const double lambda = pegasos_lambda(cfg.c, n);

  LinearModelParams params;
  params.weights.assign(n_features, 0.0);

  SplitMix64 rng(learner_stream_seed(spec));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  // Step counter warm-started at n: the first pass then runs at eta <= 1/(
  // lambda*n) = C, which keeps the unregularized bias from absorbing huge
  // early kicks (same variance control as Bottou-style t0 initialization).
  std::int64_t t = static_cast<std::int64_t>(n) + 1;
  std::vector<double> prev(n_features, 0.0);
  for (int epoch = 0; epoch < cfg.max_iter; ++epoch) {
    prev = params.weights;
    const double prev_bias = params.bias;
    rng.shuffle(order);
    for (std::size_t i : order) {
      pegasos_step(params.weights, params.bias, vectors[i], y[i], lambda, t);
      ++t;
    }
    double delta2 = (params.bias - prev_bias) * (params.bias - prev_bias);
    for (std::size_t j = 0; j < n_features; ++j) {
      const double d = params.weights[j] - prev[j];
      delta2 += d * d;
    }
    if (std::sqrt(delta2) < cfg.tol) break;
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

TrainedModel fit_sgd_hinge(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                           const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.sgd_hinge;
  const auto y = to_signed_labels(labels);
  const std::size_t n = vectors.size();
  const double lambda = pegasos_lambda(cfg.c, n);

  LinearModelParams params;
  params.weights.assign(n_features, 0.0);

  SplitMix64 rng(learner_stream_seed(spec));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  // Fixed budget of max_iter update steps; the permutation reshuffles every
  // pass through the data.
  std::int64_t t = 1;
  while (t <= cfg.max_iter) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      if (t > cfg.max_iter) break;
      const double eta = 1.0 / (lambda * static_cast<double>(cfg.t0 + t));
      pegasos_step_eta(params.weights, params.bias, vectors[i], y[i], lambda, eta);
      ++t;
    }
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_linear(const LinearModelParams& params, const SparseVector& x) {
  double score = params.bias;
  for (const auto& e : x.entries) score += params.weights[e.index] * e.weight;
  return score > 0.0 ? 1 : 0;
}

}  // namespace sakhr::detail
