#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sakhr/tfidf.hpp"

namespace sakhr {

// exp(-gamma * ||x - z||^2), accumulated sparsely. In (0, 1]; equals 1 iff
// x == z.
double rbf_kernel(const SparseVector& x, const SparseVector& z, double gamma);

// One Pegasos subgradient step for the hinge objective, eta = 1/(lambda*t):
//   margin <  1:  w <- (1-eta*lambda)*w + eta*y*x,  b <- b + eta*y
//   margin >= 1:  w <- (1-eta*lambda)*w
// label must be -1 or +1; t starts at 1. The bias is never shrunk.
void pegasos_step(std::vector<double>& weights, double& bias, const SparseVector& sample,
                  int label, double lambda, std::int64_t t);

// Same update with an explicit learning rate (used by the SGD classifier's
// eta_t = 1/(lambda*(t0+t)) schedule).
void pegasos_step_eta(std::vector<double>& weights, double& bias, const SparseVector& sample,
                      int label, double lambda, double eta);

// Hinge loss of one sample plus nothing else: max(0, 1 - y*(w.x + b)).
double hinge_loss(const std::vector<double>& weights, double bias, const SparseVector& sample,
                  int label);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t t = 0;

  explicit AdamState(std::size_t size = 0) : m(size, 0.0), v(size, 0.0) {}

  bool operator==(const AdamState&) const = default;
};

// Standard Adam with bias correction; t is incremented before the update, so
// the first call uses t = 1. Throws on shape mismatch.
void adam_update(std::span<double> params, std::span<const double> grads, AdamState& state,
                 const AdamConfig& config = {});

}  // namespace sakhr
