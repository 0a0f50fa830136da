#include "lexforge/dot.hpp"

namespace lexforge {

std::string to_dot(const LexStructure& s) {
  std::string out = "graph order {\n  rankdir=LR;\n";
  for (const auto& p : s.points()) {
    out += "  p" + std::to_string(p.id) + " [label=\"" + std::to_string(p.id) +
           "\"";
    if (p.color == Color::one) out += ", style=filled, fillcolor=gray";
    out += "];\n";
  }
  for (int i = 0; i + 1 < s.size(); ++i) {
    const Rat* v = s.f_if_present(s.id_at(i), s.id_at(i + 1));
    out += "  p" + std::to_string(s.id_at(i)) + " -- p" +
           std::to_string(s.id_at(i + 1));
    if (v) out += " [label=\"" + v->to_string() + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

namespace {

void node_lines(const TreeNode& node, std::string& out) {
  out += "  n" + std::to_string(node.id) + " [label=\"" +
         std::to_string(node.id) + "\"];\n";
  for (const auto& child : node.children) {
    node_lines(child, out);
    out += "  n" + std::to_string(node.id) + " -> n" +
           std::to_string(child.id) + ";\n";
  }
}

}  // namespace

std::string to_dot(const FiniteTree& tree) {
  std::string out = "digraph tree {\n";
  node_lines(tree.root, out);
  out += "}\n";
  return out;
}

}  // namespace lexforge
