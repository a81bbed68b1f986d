#include <numeric>
#include <vector>

#include "detail.hpp"
#include "sakhr/optim.hpp"
#include "sakhr/rng.hpp"

namespace sakhr::detail {

// Kernelized Pegasos: each training point accumulates a violation count
// alpha_i; the decision value at step t is (1/(lambda*t)) * sum_j alpha_j *
// y_j * K(x_j, x). Only the sign survives into the stored model, so the
// support coefficients keep alpha_i * y_i without the positive 1/(lambda*T)
// factor.
TrainedModel fit_rbf_svm(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                         const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.svm_rbf;
  const auto y = to_signed_labels(labels);
  const std::size_t n = vectors.size();
  const double lambda = 1.0 / (cfg.c * static_cast<double>(n));

  // Gram matrix; desk-scale corpora keep this small. Falls back to on-demand
  // kernel evaluation for large n.
  const bool precompute = n <= 2048;
  std::vector<double> gram;
  if (precompute) {
    gram.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      gram[i * n + i] = 1.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        const double k = rbf_kernel(vectors[i], vectors[j], cfg.gamma);
        gram[i * n + j] = k;
        gram[j * n + i] = k;
      }
    }
  }
  auto kernel_at = [&](std::size_t i, std::size_t j) {
    return precompute ? gram[i * n + j] : rbf_kernel(vectors[i], vectors[j], cfg.gamma);
  };

  std::vector<double> alpha(n, 0.0);
  std::vector<std::size_t> active;  // indices with alpha > 0

  SplitMix64 rng(learner_stream_seed(spec));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::int64_t t = 1;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      double s = 0.0;
      for (std::size_t j : active) s += alpha[j] * y[j] * kernel_at(j, i);
      const double decision = s / (lambda * static_cast<double>(t));
      if (static_cast<double>(y[i]) * decision < 1.0) {
        if (alpha[i] == 0.0) active.push_back(i);
        alpha[i] += 1.0;
      }
      ++t;
    }
  }

  RbfSvmParams params;
  params.gamma = cfg.gamma;
  params.bias = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] == 0.0) continue;
    params.support_coefficients.push_back(alpha[i] * static_cast<double>(y[i]));
    params.support_vectors.push_back(vectors[i]);
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_rbf(const RbfSvmParams& params, const SparseVector& x) {
  double s = params.bias;
  for (std::size_t j = 0; j < params.support_vectors.size(); ++j) {
    s += params.support_coefficients[j] * rbf_kernel(params.support_vectors[j], x, params.gamma);
  }
  return s > 0.0 ? 1 : 0;
}

}  // namespace sakhr::detail
