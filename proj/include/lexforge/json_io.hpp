#pragma once

#include <string>

#include <json.hpp>

#include "lexforge/amalgam.hpp"
#include "lexforge/analysis.hpp"
#include "lexforge/generic.hpp"
#include "lexforge/structure.hpp"
#include "lexforge/tree.hpp"

namespace lexforge {

using Json = nlohmann::ordered_json;

/// On-disk structure format:
///   {"points": [{"id":0,"color":0}, ...], "f": [[i, j, "p/q"], ...]}
/// Points are listed in order; rationals are reduced "p/q" strings with a
/// positive denominator, and pairs are emitted with i before j in the
/// listing and sorted by position. The reader rejects unreduced or
/// zero-denominator rationals, self pairs, unknown ids in pairs, and
/// duplicate pair entries; duplicate point ids and missing pairs load fine
/// and surface through validate().
Json to_json(const LexStructure& s);
LexStructure structure_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const Amalgam& amalgam);
Json to_json(const Demand& demand);
Json to_json(const SaturationResult& result);
Json to_json(const AxiomReport& report);
Json to_json(const std::vector<Cut>& cuts);
Json to_json(const TreeOrder& order);

/// Saturation output bundles the structure with its log; readers of
/// structure files accept either a bare structure or such a bundle.
SaturationResult saturation_from_json(const Json& j);
LexStructure structure_or_bundle_from_json(const Json& j);

/// Trees are nested arrays of child lists; a leaf is [].
FiniteTree tree_from_json(const Json& j);
Json to_json(const FiniteTree& tree);

Json parse_json_text(const std::string& text);
std::string dump_json(const Json& j);

}  // namespace lexforge
