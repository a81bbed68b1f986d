#include "sakhr/optim.hpp"

#include <cmath>

#include "sakhr/errors.hpp"

namespace sakhr {

double rbf_kernel(const SparseVector& x, const SparseVector& z, double gamma) {
  return std::exp(-gamma * x.squared_distance(z));
}

namespace {

double margin(const std::vector<double>& weights, double bias, const SparseVector& sample,
              int label) {
  double score = bias;
  for (const auto& e : sample.entries) score += weights[e.index] * e.weight;
  return static_cast<double>(label) * score;
}

}  // namespace

double hinge_loss(const std::vector<double>& weights, double bias, const SparseVector& sample,
                  int label) {
  const double m = margin(weights, bias, sample, label);
  return m >= 1.0 ? 0.0 : 1.0 - m;
}

void pegasos_step_eta(std::vector<double>& weights, double& bias, const SparseVector& sample,
                      int label, double lambda, double eta) {
  const bool violated = margin(weights, bias, sample, label) < 1.0;
  const double shrink = 1.0 - eta * lambda;
  for (auto& w : weights) w *= shrink;
  if (violated) {
    const double step = eta * static_cast<double>(label);
    for (const auto& e : sample.entries) weights[e.index] += step * e.weight;
    bias += step;
  }
}

void pegasos_step(std::vector<double>& weights, double& bias, const SparseVector& sample,
                  int label, double lambda, std::int64_t t) {
  pegasos_step_eta(weights, bias, sample, label, lambda,
                   1.0 / (lambda * static_cast<double>(t)));
}

void adam_update(std::span<double> params, std::span<const double> grads, AdamState& state,
                 const AdamConfig& config) {
  if (params.size() != grads.size() || state.m.size() != params.size() ||
      state.v.size() != params.size()) {
    throw Error(ErrorKind::input, "adam: parameter/gradient/state shape mismatch");
  }
  state.t += 1;
  const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(state.t));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * grads[i];
    state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * grads[i] * grads[i];
    const double m_hat = state.m[i] / bc1;
    const double v_hat = state.v[i] / bc2;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

}  // namespace sakhr
