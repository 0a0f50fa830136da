#pragma once

#include <vector>

#include "lexforge/structure.hpp"

namespace lexforge {

/// Rooted tree with ordered children. Node ids are assigned in preorder.
struct TreeNode {
  int id = 0;
  std::vector<TreeNode> children;
};

struct FiniteTree {
  TreeNode root;

  int node_count() const;
  int leaf_count() const;
};

/// Assigns preorder ids to a nested child-list shape.
FiniteTree make_tree(const TreeNode& shape);

/// Complete k-ary tree of the given height (height 0 = a single node).
FiniteTree complete_tree(int arity, int height);

struct BranchCut {
  std::vector<int> path;  // child indices from the root
  int cut_index;          // boundary position in the leaf order
};

struct TreeOrder {
  LexStructure structure;         // one 0-colored point per leaf
  std::vector<BranchCut> branches;  // every maximal branch, in leaf order
};

/// Leaf order of a tree as a structure in the class: leaves are listed in
/// depth-first order and every pair's value is the depth of their deepest
/// common ancestor (root = 0). Each maximal branch maps to the cut whose
/// lower side is the leaves up to and including its leaf; the mapping is
/// injective.
TreeOrder tree_to_order(const FiniteTree& tree);

}  // namespace lexforge
