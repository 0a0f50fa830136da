#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "lexforge/structure.hpp"

namespace lexforge {

/// Canonical description of a one-point extension: where the new point goes
/// (cut_index counts points below it), its color, and its pair values to the
/// nearest neighbor on each side. Values to all other points follow from the
/// min-law, so this is a complete description.
///
/// left_value must be present iff cut_index > 0, right_value iff
/// cut_index < |V|. When both sides exist, min(left_value, right_value) is
/// forced to equal the host's pair value across the cut.
struct ExtensionSpec {
  int cut_index = 0;
  Color color = Color::zero;
  std::optional<Rat> left_value;
  std::optional<Rat> right_value;

  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

/// All cross-consistent one-point extensions whose boundary values are drawn
/// from value_set together with the values already used in s. On small
/// structures this is exactly the set of valid one-point superstructures
/// over that pool, one spec each.
std::vector<ExtensionSpec> enumerate_extensions(const LexStructure& s,
                                                const std::vector<Rat>& value_set);

/// Checks the structural fit of spec against s; on failure returns the
/// human-readable reason (naming the forced cross value).
std::optional<std::string> spec_inconsistency(const LexStructure& s,
                                              const ExtensionSpec& spec);

/// Materializes a one-point extension. The new point gets id s.fresh_id()
/// and its pair values propagate by the min-law: below the cut
/// f(b,a) = min{left_value, f(maxL, a)}, mirrored above. The input embeds
/// identically and the output is valid. Throws on cross-inconsistent specs.
LexStructure realize_extension(const LexStructure& s, const ExtensionSpec& spec);

/// Deterministic random walk through the extension calculus: n consistent
/// one-point extensions of the empty structure with boundary values from
/// the pool. Always valid by construction.
LexStructure random_structure(int n, const std::vector<Rat>& value_pool,
                              std::uint64_t seed);

}  // namespace lexforge
