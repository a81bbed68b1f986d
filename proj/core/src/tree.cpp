#include "sakhr/tree.hpp"

#include "sakhr/errors.hpp"

namespace sakhr {

double gini_impurity(std::size_t count0, std::size_t count1) {
  const auto total = count0 + count1;
  if (total == 0) {
    throw Error(ErrorKind::input, "gini_impurity: empty node");
  }
  const double p0 = static_cast<double>(count0) / static_cast<double>(total);
  const double p1 = static_cast<double>(count1) / static_cast<double>(total);
  return 1.0 - p0 * p0 - p1 * p1;
}

int DecisionTree::predict(const SparseVector& x) const {
  int node = 0;
  while (!nodes[node].is_leaf()) {
    const auto& n = nodes[node];
    node = x.at(static_cast<std::size_t>(n.feature)) <= n.threshold ? n.left : n.right;
  }
  return nodes[node].label;
}

}  // namespace sakhr
