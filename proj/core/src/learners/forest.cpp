#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/rng.hpp"

namespace sakhr::detail {

namespace {

// Column-major view of the training data for cheap per-feature scans.
struct DenseColumns {
  std::size_t n = 0;
  std::size_t v = 0;
  std::vector<double> values;  // v * n, column-major

  double at(std::size_t feature, std::size_t sample) const {
    return values[feature * n + sample];
  }
};

DenseColumns densify(const std::vector<SparseVector>& vectors, std::size_t n_features) {
  DenseColumns cols;
  cols.n = vectors.size();
  cols.v = n_features;
  cols.values.assign(n_features * vectors.size(), 0.0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& e : vectors[i].entries) {
      cols.values[e.index * cols.n + i] = e.weight;
    }
  }
  return cols;
}

struct SplitChoice {
  bool found = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  double score = 0.0;  // weighted child impurity
};

struct TreeBuilder {
  const DenseColumns& cols;
  const std::vector<int>& labels;  // dataset labels, indexed by sample id
  std::size_t features_per_split;
  SplitMix64& rng;
  DecisionTree tree;

  // ids: multiset of sample indices reaching this node (bootstrap may repeat).
  int build(std::vector<std::size_t>& ids) {
    std::size_t count1 = 0;
    for (std::size_t id : ids) count1 += static_cast<std::size_t>(labels[id]);
    const std::size_t count0 = ids.size() - count1;

    const int node_index = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();

    if (count0 == 0 || count1 == 0) {
      tree.nodes[node_index].label = count1 > 0 ? 1 : 0;
      return node_index;
    }

    const SplitChoice split = best_split(ids, count0, count1);
    if (!split.found) {
      tree.nodes[node_index].label = count1 > count0 ? 1 : 0;
      return node_index;
    }

    std::vector<std::size_t> left_ids;
    std::vector<std::size_t> right_ids;
    for (std::size_t id : ids) {
      (cols.at(split.feature, id) <= split.threshold ? left_ids : right_ids).push_back(id);
    }
    ids.clear();
    ids.shrink_to_fit();

    const int left = build(left_ids);
    const int right = build(right_ids);
    auto& node = tree.nodes[node_index];
    node.feature = static_cast<int>(split.feature);
    node.threshold = split.threshold;
    node.left = left;
    node.right = right;
    return node_index;
  }

  SplitChoice best_split(const std::vector<std::size_t>& ids, std::size_t count0,
                         std::size_t count1) {
    // Random feature subset without replacement (partial Fisher-Yates).
    std::vector<std::size_t> features(cols.v);
    std::iota(features.begin(), features.end(), 0);
    const std::size_t m = std::min(features_per_split, cols.v);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.next_below(cols.v - i));
      std::swap(features[i], features[j]);
    }

    const auto total = static_cast<double>(ids.size());
    SplitChoice best;
    std::vector<std::pair<double, std::size_t>> ordered(ids.size());

    for (std::size_t fi = 0; fi < m; ++fi) {
      const std::size_t f = features[fi];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        ordered[i] = {cols.at(f, ids[i]), ids[i]};
      }
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      std::size_t left1 = 0;
      for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
        left1 += static_cast<std::size_t>(labels[ordered[i].second]);
        if (ordered[i].first == ordered[i + 1].first) continue;
        const std::size_t nl = i + 1;
        const std::size_t nr = ordered.size() - nl;
        const std::size_t left0 = nl - left1;
        const std::size_t right1 = count1 - left1;
        const std::size_t right0 = count0 - left0;
        const double score = (static_cast<double>(nl) * gini_impurity(left0, left1) +
                              static_cast<double>(nr) * gini_impurity(right0, right1)) /
                             total;
        if (!best.found || score < best.score) {
          best.found = true;
          best.feature = f;
          best.threshold = (ordered[i].first + ordered[i + 1].first) / 2.0;
          best.score = score;
        }
      }
    }
    return best;
  }
};

}  // namespace

TrainedModel fit_forest(const LearnerSpec& spec, const std::vector<SparseVector>& vectors,
                        const std::vector<int>& labels, std::size_t n_features) {
  const auto& cfg = spec.hp.random_forest;
  if (cfg.n_trees < 1) {
    throw Error(ErrorKind::fit, "random_forest: n_trees must be >= 1");
  }
  const std::size_t n = vectors.size();
  const DenseColumns cols = densify(vectors, n_features);
  const auto features_per_split = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n_features))));

  ForestParams params;
  params.trees.reserve(cfg.n_trees);
  const std::uint64_t base = learner_stream_seed(spec);
  for (int tree_index = 0; tree_index < cfg.n_trees; ++tree_index) {
    SplitMix64 rng(derive_seed(base, static_cast<std::uint64_t>(tree_index)));
    std::vector<std::size_t> ids(n);
    if (cfg.bootstrap) {
      for (auto& id : ids) id = static_cast<std::size_t>(rng.next_below(n));
    } else {
      std::iota(ids.begin(), ids.end(), 0);
    }
    TreeBuilder builder{cols, labels, features_per_split, rng, {}};
    builder.build(ids);
    params.trees.push_back(std::move(builder.tree));
  }

  TrainedModel model{spec.kind, n_features, spec.seed, spec.hp, std::move(params)};
  return model;
}

int predict_forest(const ForestParams& params, const SparseVector& x) {
  std::size_t votes1 = 0;
  for (const auto& tree : params.trees) votes1 += static_cast<std::size_t>(tree.predict(x));
  return 2 * votes1 > params.trees.size() ? 1 : 0;
}

}  // namespace sakhr::detail
