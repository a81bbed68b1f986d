#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>

#include "detail.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/rng.hpp"

namespace sakhr {

namespace {

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Forward pass for one sample; fills a1 (hidden activations) and returns the
// output probability.
double forward(const MlpParams& p, const SparseVector& x, std::vector<double>& a1) {
  const std::size_t h = p.hidden_size;
  const auto w1 = p.w1();
  const auto b1 = p.b1();
  const auto w2 = p.w2();

  a1.assign(h, 0.0);
  for (const auto& e : x.entries) {
    const double v = e.weight;
    const double* row = w1.data() + e.index * h;
    for (std::size_t j = 0; j < h; ++j) a1[j] += v * row[j];
  }
  double z2 = p.b2();
  for (std::size_t j = 0; j < h; ++j) {
    a1[j] = logistic(a1[j] + b1[j]);
    z2 += w2[j] * a1[j];
  }
  return logistic(z2);
}

double sample_loss(double prob, int label) {
  const double p = std::clamp(prob, 1e-12, 1.0 - 1e-12);
  return label == 1 ? -std::log(p) : -std::log(1.0 - p);
}

// Accumulates mean loss and mean gradient over the index subset.
double batch_gradients(const MlpParams& p, const std::vector<SparseVector>& xs,
                       const std::vector<int>& ys, std::span<const std::size_t> batch,
                       std::vector<double>& grads) {
  const std::size_t h = p.hidden_size;
  const auto w2 = p.w2();
  grads.assign(p.theta.size(), 0.0);
  const std::size_t w1_size = p.input_size * h;
  double loss = 0.0;
  std::vector<double> a1;
  std::vector<double> dz1(h);

  for (std::size_t idx : batch) {
    const auto& x = xs[idx];
    const double y = ys[idx] == 1 ? 1.0 : 0.0;
    const double prob = forward(p, x, a1);
    loss += sample_loss(prob, ys[idx]);

    const double dz2 = prob - y;
    grads[p.theta.size() - 1] += dz2;  // b2
    for (std::size_t j = 0; j < h; ++j) {
      grads[w1_size + h + j] += dz2 * a1[j];  // w2
      dz1[j] = dz2 * w2[j] * a1[j] * (1.0 - a1[j]);
      grads[w1_size + j] += dz1[j];  // b1
    }
    for (const auto& e : x.entries) {
      double* row = grads.data() + e.index * h;
      for (std::size_t j = 0; j < h; ++j) row[j] += dz1[j] * e.weight;
    }
  }

  const auto scale = 1.0 / static_cast<double>(batch.size());
  for (auto& g : grads) g *= scale;
  return loss * scale;
}

}  // namespace

double mlp_loss(const MlpParams& params, const std::vector<SparseVector>& vectors,
                const std::vector<int>& labels) {
  if (vectors.size() != labels.size() || vectors.empty()) {
    throw Error(ErrorKind::input, "mlp_loss: batch shape mismatch");
  }
  std::vector<double> a1;
  double loss = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    loss += sample_loss(forward(params, vectors[i], a1), labels[i]);
  }
  return loss / static_cast<double>(vectors.size());
}

std::vector<double> mlp_gradients(const MlpParams& params, const std::vector<SparseVector>& vectors,
                                  const std::vector<int>& labels) {
  if (vectors.size() != labels.size() || vectors.empty()) {
    throw Error(ErrorKind::input, "mlp_gradients: batch shape mismatch");
  }
  std::vector<std::size_t> all(vectors.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<double> grads;
  batch_gradients(params, vectors, labels, all, grads);
  return grads;
}

namespace detail {

TrainedModel fit_mlp(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                     const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.mlp;
  if (cfg.hidden_size < 1) {
    throw Error(ErrorKind::fit, "mlp: hidden_size must be >= 1");
  }
  const std::size_t n = vectors.size();
  const std::size_t h = static_cast<std::size_t>(cfg.hidden_size);

  MlpParams params;
  params.input_size = n_features;
  params.hidden_size = h;
  params.theta.assign(params.parameter_count(), 0.0);
  params.adam_state = AdamState(params.theta.size());

  // Glorot-uniform init for both weight layers; biases start at zero.
  SplitMix64 rng(learner_stream_seed(spec));
  {
    const double limit1 = std::sqrt(6.0 / static_cast<double>(n_features + h));
    for (auto& w : params.w1()) w = rng.next_in(-limit1, limit1);
    const double limit2 = std::sqrt(6.0 / static_cast<double>(h + 1));
    for (auto& w : params.w2()) w = rng.next_in(-limit2, limit2);
  }

  const std::size_t batch_size =
      cfg.batch_size > 0 ? std::min<std::size_t>(cfg.batch_size, n) : std::min<std::size_t>(200, n);
  const AdamConfig adam{cfg.learning_rate, cfg.beta1, cfg.beta2, cfg.epsilon};

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> grads;

  double prev_loss = std::numeric_limits<double>::infinity();
  int stall = 0;
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += batch_size) {
      const std::size_t len = std::min(batch_size, n - start);
      const std::span<const std::size_t> batch(order.data() + start, len);
      const double batch_loss = batch_gradients(params, vectors, labels, batch, grads);
      epoch_loss += batch_loss * static_cast<double>(len);
      adam_update(params.theta, grads, params.adam_state, adam);
    }
    epoch_loss /= static_cast<double>(n);

    if (cfg.tol > 0.0) {
      stall = (prev_loss - epoch_loss < cfg.tol) ? stall + 1 : 0;
      if (stall >= cfg.patience) break;
      prev_loss = epoch_loss;
    }
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_mlp(const MlpParams& params, const SparseVector& x) {
  std::vector<double> a1;
  return forward(params, x, a1) > 0.5 ? 1 : 0;
}

}  // namespace detail
}  // namespace sakhr
