#pragma once

#include <string>

#include "lexforge/structure.hpp"

namespace lexforge {

/// Canonical form under strong isomorphism: two structures get the same
/// signature exactly when some relabeling of points matches listing order,
/// colors, and every pair value verbatim.
std::string canonical_signature(const LexStructure& s);

/// Canonical form under pattern isomorphism: pair values are replaced by
/// their rank within the structure's value set, so structures agree exactly
/// when they match up to an order isomorphism of the used values.
std::string pattern_signature(const LexStructure& s);

}  // namespace lexforge
