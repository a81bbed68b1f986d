#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail.hpp"
#include "sakhr/errors.hpp"

namespace sakhr {

double adaboost_stump_weight(double epsilon) {
  const double eps = std::clamp(epsilon, 1e-10, 1.0 - 1e-10);
  return 0.5 * std::log((1.0 - eps) / eps);
}

namespace detail {

namespace {

inline int stump_output(const Stump& stump, double value) {
  const int raw = value > stump.threshold ? 1 : -1;
  return stump.polarity * raw;
}

}  // namespace

TrainedModel fit_adaboost(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                          const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.adaboost;
  if (cfg.n_rounds < 1) {
    throw Error(ErrorKind::fit, "adaboost: n_rounds must be >= 1");
  }
  const std::size_t n = vectors.size();
  const auto y = to_signed_labels(labels);

  // Dense per-feature columns sorted once; every round reuses the order.
  std::vector<std::vector<double>> column(n_features, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : vectors[i].entries) column[e.index][i] = e.weight;
  }
  std::vector<std::vector<std::size_t>> order(n_features);
  for (std::size_t f = 0; f < n_features; ++f) {
    auto& ord = order[f];
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      return column[f][a] < column[f][b];
    });
  }

  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  AdaboostParams params;

  for (int round = 0; round < cfg.n_rounds; ++round) {
    bool found = false;
    double best_err = 0.0;
    Stump best;

    double w_pos = 0.0;  // total weight of +1 labels; weights sum to 1
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] > 0) w_pos += weights[i];
    }
    const double w_neg = 1.0 - w_pos;

    for (std::size_t f = 0; f < n_features; ++f) {
      const auto& ord = order[f];
      const auto& col = column[f];

      double pos_prefix = 0.0;
      double neg_prefix = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t s = ord[i];
        if (y[s] > 0) {
          pos_prefix += weights[s];
        } else {
          neg_prefix += weights[s];
        }
        if (col[ord[i]] == col[ord[i + 1]]) continue;
        // Stump "predict +1 when value > threshold" misclassifies positive
        // samples at or below the threshold and negative samples above it.
        const double err_pos = pos_prefix + (w_neg - neg_prefix);
        const double threshold = (col[ord[i]] + col[ord[i + 1]]) / 2.0;
        if (!found || err_pos < best_err) {
          found = true;
          best_err = err_pos;
          best = Stump{f, threshold, 1};
        }
        if (1.0 - err_pos < best_err) {
          best_err = 1.0 - err_pos;
          best = Stump{f, threshold, -1};
        }
      }
    }

    if (!found) break;  // every feature is constant; nothing to split on

    const double alpha = adaboost_stump_weight(best_err);
    if (alpha == 0.0) break;  // best stump is no better than chance

    params.stumps.push_back(best);
    params.stump_weights.push_back(alpha);

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int h = stump_output(best, column[best.feature][i]);
      weights[i] *= std::exp(-alpha * static_cast<double>(y[i] * h));
      total += weights[i];
    }
    for (auto& w : weights) w /= total;

    if (best_err <= 1e-10) break;  // perfect stump; later rounds add nothing
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_adaboost(const AdaboostParams& params, const SparseVector& x) {
  double score = 0.0;
  for (std::size_t t = 0; t < params.stumps.size(); ++t) {
    const auto& stump = params.stumps[t];
    score += params.stump_weights[t] *
             static_cast<double>(stump_output(stump, x.at(stump.feature)));
  }
  return score > 0.0 ? 1 : 0;
}

}  // namespace detail
}  // namespace sakhr
