#pragma once

#include "lexforge/embedding.hpp"
#include "lexforge/structure.hpp"

namespace lexforge {

/// Pinned choices for the free parameters of the amalgamation construction.
///
/// c0_split: how many of the undetermined middle points (the ones tied to
/// the boundary at exactly the maximal value) are placed below the new
/// point. 0 is the plain choice: the new point goes below all of them.
/// Requests past the end collapse to "all below".
///
/// The m1 margins shift the chosen value above its lower bound: when both
/// split sides are nonempty the bound is the pair value across the split,
/// otherwise it is the maximal value m0 itself. Margins must be >= 0; the
/// defaults (0 across the split, +1 one-sided) keep every inequality strict
/// where the construction wants it.
struct AmalgamStrategy {
  int c0_split = 0;
  Rat m1_margin_both{0};
  Rat m1_margin_single{1};
};

/// Counters for the consistency checks that run inside the construction.
struct AmalgamStats {
  int case_overlap_checks = 0;  // both directional rules applied and agreed
  int c0_pairs_checked = 0;     // middle-set pairs confirmed >= m0
};

struct Amalgam {
  LexStructure result;
  Embedding emb_b;  // from B into result
  Embedding emb_c;  // from C into result
};

/// Amalgamates B = A + one point with C over their common substructure A
/// (identity embeddings). The result is C plus one new point; both inputs
/// embed, the embeddings agree on A, and the result is valid. The output is
/// re-validated and the internal consistency checks throw std::logic_error
/// if they ever fail.
Amalgam amalgamate_point(const LexStructure& a, const LexStructure& b,
                         const LexStructure& c,
                         const AmalgamStrategy& strategy = {},
                         AmalgamStats* stats = nullptr);

/// General amalgamation over a common substructure A: folds the one-point
/// construction over the points of V(B) \ V(A) in listing order, rebasing
/// after each insertion. |result| = |B| + |C| - |A|. With empty A this is
/// joint embedding.
Amalgam amalgamate(const LexStructure& a, const LexStructure& b,
                   const LexStructure& c, const AmalgamStrategy& strategy = {},
                   AmalgamStats* stats = nullptr);

/// Joint embedding: all of B below all of C, every cross pair at a fresh
/// value strictly below every value used in either input (0 when none
/// exist). Ids are kept where the two inputs do not collide.
Amalgam joint_embed(const LexStructure& b, const LexStructure& c);

}  // namespace lexforge
