#pragma once

#include <string>

#include "lexforge/structure.hpp"
#include "lexforge/tree.hpp"

namespace lexforge {

/// Graphviz rendering: points left to right, pair values as labels on the
/// edges between consecutive points, 1-colored points drawn filled.
std::string to_dot(const LexStructure& s);

/// Graphviz rendering of a rooted tree, children in order.
std::string to_dot(const FiniteTree& tree);

}  // namespace lexforge
