#pragma once

#include <map>

#include "lexforge/structure.hpp"

namespace lexforge {

/// An injective point map between two structures. Meaningful only together
/// with its source and target, which the holder passes explicitly.
struct Embedding {
  std::map<PointId, PointId> map;

  PointId at(PointId id) const {
    auto it = map.find(id);
    if (it == map.end())
      throw Error("domain", "embedding undefined on point " + std::to_string(id));
    return it->second;
  }
};

Embedding identity_embedding(const LexStructure& s);

/// True iff e maps every point of src into dst injectively, preserving
/// listing order, colors, and pair values exactly.
bool is_embedding(const LexStructure& src, const LexStructure& dst, const Embedding& e);

/// True iff src's points are literally contained in dst with the same order,
/// colors, and pair values (the identity map is an embedding).
bool is_identity_substructure(const LexStructure& src, const LexStructure& dst);

}  // namespace lexforge
