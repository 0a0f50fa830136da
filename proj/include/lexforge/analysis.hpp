#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lexforge/structure.hpp"

namespace lexforge {

/// A two-part order partition of the point set: everything in lower
/// precedes everything in upper.
struct Cut {
  std::vector<PointId> lower;
  std::vector<PointId> upper;
};

/// The |V|+1 cuts of the listing order, by boundary position.
std::vector<Cut> enumerate_cuts(const LexStructure& s);

/// Inserts one point of the given color into the cut, with the given
/// boundary values (left to max(lower), right to min(upper); each present
/// iff its side is nonempty). Errors name the forced across-the-cut value.
LexStructure insert_into_cut(const LexStructure& s, const Cut& cut, Color color,
                             std::optional<Rat> left_value,
                             std::optional<Rat> right_value);

/// Boundary value rule for complete_structure; receives the structure and
/// the position of the left point of a consecutive pair.
using FillRule = std::function<Rat(const LexStructure&, int)>;

/// Finite completion step: one 1-colored point into every internal cut,
/// with both boundary values equal to the consecutive pair's value (or to
/// the supplied rule's output). The input embeds identically, the 0-colored
/// census is unchanged, and no two original-consecutive points remain
/// adjacent.
LexStructure complete_structure(const LexStructure& s, const FillRule& rule = {});

/// A plain linear order inside the class: n 0-colored points with every
/// pair value equal to m.
LexStructure embed_linear_order(int n, const Rat& m);

/// Is x the least point above Y, i.e. is there no point strictly between
/// all of Y and x? Brute force over the point set; additionally asserts
/// that whenever supremum_condition holds the answer is positive.
bool check_supremum(const LexStructure& s, PointId x,
                    const std::vector<PointId>& y_set);

/// The finite sufficient condition for x = sup Y: every non-member below x
/// is beaten by some member at a strictly higher pair value to x.
bool supremum_condition(const LexStructure& s, PointId x,
                        const std::vector<PointId>& y_set);

enum class WitnessSide { none, in_d, in_e };
enum class GapClass { removable, irremovable, not_gap };

/// Symbolic cofinality/supremum data for a cut (D,E), supplied by the
/// caller; this is about infinite configurations and is not computable from
/// a finite structure.
///
///   witness_side     which side holds the distinguished witness, if any
///   witness_cofinal  the witness's cross values are cofinal in the whole
///                    cross value set
///   witness_coinitial the witness's same-side values are coinitial in the
///                    strict upper set of the cross values
///   fset_has_sup     the cross value set has a supremum in the base order
///   upperset_has_inf its strict upper set has an infimum in the base order
///
/// In a dense base order the last two agree for every genuine
/// configuration; profiles where they differ are rejected.
struct GapProfile {
  WitnessSide witness_side = WitnessSide::none;
  bool fset_has_sup = false;
  bool upperset_has_inf = false;
  bool witness_cofinal = false;
  bool witness_coinitial = false;
};

/// Decision table over consistent profiles:
///   irremovable  iff a witness exists, cofinal and coinitial, and the
///                cross value set has no supremum
///   not_gap      iff the cross value set has a supremum and its upper set
///                an infimum (the boundary materializes on the point side)
///   removable    otherwise
GapClass classify_gap_profile(const GapProfile& profile);

struct DensityEntry {
  Rat value;
  std::optional<PointId> left;   // witness below the anchor, if any
  std::optional<PointId> right;  // witness above the anchor, if any
};

/// For each value in value_set, the first witness at exactly that pair
/// value on each side of the anchor.
std::vector<DensityEntry> witness_density(const LexStructure& s, PointId anchor,
                                          const std::vector<Rat>& value_set);

}  // namespace lexforge
