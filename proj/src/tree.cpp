#include "lexforge/tree.hpp"

namespace lexforge {

namespace {

int count_nodes(const TreeNode& node) {
  int total = 1;
  for (const auto& child : node.children) total += count_nodes(child);
  return total;
}

int count_leaves(const TreeNode& node) {
  if (node.children.empty()) return 1;
  int total = 0;
  for (const auto& child : node.children) total += count_leaves(child);
  return total;
}

void assign_ids(TreeNode& node, int& next) {
  node.id = next++;
  for (auto& child : node.children) assign_ids(child, next);
}

struct LeafInfo {
  std::vector<int> path;  // child indices from the root
};

void collect_leaves(const TreeNode& node, std::vector<int>& path,
                    std::vector<LeafInfo>& leaves) {
  if (node.children.empty()) {
    leaves.push_back({path});
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_leaves(node.children[i], path, leaves);
    path.pop_back();
  }
}

}  // namespace

int FiniteTree::node_count() const { return count_nodes(root); }
int FiniteTree::leaf_count() const { return count_leaves(root); }

FiniteTree make_tree(const TreeNode& shape) {
  FiniteTree tree{shape};
  int next = 0;
  assign_ids(tree.root, next);
  return tree;
}

FiniteTree complete_tree(int arity, int height) {
  if (arity < 1) throw Error("domain", "complete_tree: arity must be >= 1");
  if (height < 0) throw Error("domain", "complete_tree: height must be >= 0");
  TreeNode shape;
  if (height > 0) {
    TreeNode child = complete_tree(arity, height - 1).root;
    shape.children.assign(arity, child);
  }
  return make_tree(shape);
}

TreeOrder tree_to_order(const FiniteTree& tree) {
  std::vector<LeafInfo> leaves;
  std::vector<int> path;
  collect_leaves(tree.root, path, leaves);

  const int n = static_cast<int>(leaves.size());
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) points.push_back({i, Color::zero});

  // pair value = depth of the deepest common ancestor, as a rational
  std::map<PairKey, Rat> fvals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::size_t depth = 0;
      const auto& a = leaves[i].path;
      const auto& b = leaves[j].path;
      while (depth < a.size() && depth < b.size() && a[depth] == b[depth])
        ++depth;
      fvals.emplace(PairKey::of(i, j), Rat(static_cast<std::int64_t>(depth)));
    }

  TreeOrder out;
  out.structure = LexStructure(std::move(points), std::move(fvals));
  for (int i = 0; i < n; ++i)
    out.branches.push_back({leaves[i].path, i + 1});
  return out;
}

}  // namespace lexforge
