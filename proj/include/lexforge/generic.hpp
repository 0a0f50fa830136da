#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lexforge/extension.hpp"
#include "lexforge/structure.hpp"

namespace lexforge {

enum class DemandKind { one_star, two_star };
enum class Side { left, right };

/// A single witness requirement from the extension axioms.
///
/// one_star: a point of the given color on the given side of `anchor`,
/// at pair value exactly `value`.
///
/// two_star: a point of the given color strictly between `anchor` and
/// `anchor2` (anchor listed first), whose pair value to the anchor named by
/// `side` is exactly `value`; `value` must be at least the pair value of
/// the anchor pair. The value to the opposite anchor is then forced by the
/// min-law. The full interval axiom for a pair is the conjunction of these
/// requirements over both sides and both colors.
struct Demand {
  DemandKind kind = DemandKind::one_star;
  PointId anchor = 0;
  std::optional<PointId> anchor2;
  Side side = Side::left;
  Rat value;
  Color color = Color::zero;

  friend auto operator<=>(const Demand&, const Demand&) = default;
};

struct SaturationLog {
  int rounds = 0;
  std::map<PointId, int> births;  // point -> round it appeared (seed = 0)
  std::set<Demand> satisfied;
  int added = 0;
};

struct AxiomReport {
  bool holds = true;
  std::vector<Demand> failures;
};

struct SaturationResult {
  LexStructure structure;
  SaturationLog log;
};

/// First point (in listing order) witnessing the demand, if any. Throws on
/// unknown anchors, on two_star anchors out of order, and on two_star
/// values below the anchor pair's value.
std::optional<PointId> find_witness(const LexStructure& s, const Demand& d);

/// Demand-driven saturation. Each round enumerates every demand whose
/// anchors were born in earlier rounds, with values from value_set and both
/// colors, and discharges the unmet ones by one-point extensions. After r
/// rounds every demand anchored at points born before r holds. Only values
/// from value_set and the seed ever appear. Deterministic in rng_seed; the
/// generator only picks among equally valid insertion cuts.
SaturationResult saturate(const LexStructure& seed,
                          const std::vector<Rat>& value_set, int rounds,
                          std::uint64_t rng_seed);

/// Anchor filter for axiom checking; empty means "all points".
using GenerationFilter = std::function<bool(PointId)>;

/// Checks both extension axioms for every anchor accepted by the filter,
/// every value in value_set, and both colors, by exact witness matching.
AxiomReport check_extension_axioms(const LexStructure& s,
                                   const std::vector<Rat>& value_set,
                                   const GenerationFilter& filter = {});

/// Does the second player survive k rounds of the back-and-forth game in
/// which positions are partial strong isomorphisms (order, colors, exact
/// pair values) and moves are points whose pair values to the points already
/// chosen lie in value_set or in either structure's value set? Exhaustive
/// game-tree search, intended for desk-scale inputs.
bool ef_game(const LexStructure& s1, const LexStructure& s2, int k,
             const std::vector<Rat>& value_set);

}  // namespace lexforge
