#pragma once

#include <cstddef>
#include <vector>

#include "sakhr/tfidf.hpp"

namespace sakhr {

// 1 - p0^2 - p1^2 for a binary node. Throws when both counts are zero.
double gini_impurity(std::size_t count0, std::size_t count1);

// Flat binary decision tree. Internal nodes route on value <= threshold to
// the left child; leaves carry a class label and have feature == -1.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int label = 0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // node 0 is the root

  int predict(const SparseVector& x) const;

  bool operator==(const DecisionTree&) const = default;
};

}  // namespace sakhr
