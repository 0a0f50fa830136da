#pragma once

#include <vector>

#include "lexforge/structure.hpp"

namespace lexforge {

/// Partition of the point set under "equal or pair value above m". Classes
/// are returned in listing order; each class is an interval of the order.
/// Raising m refines the partition. Requires a valid structure.
std::vector<std::vector<PointId>> sim_partition(const LexStructure& s, const Rat& m);

struct OrderedClasses {
  std::vector<std::vector<PointId>> classes;  // in induced order
  std::vector<PointId> representatives;       // first point of each class
};

/// The quotient order on the partition classes. The induced order does not
/// depend on which representatives are compared.
OrderedClasses class_order(const LexStructure& s, const Rat& m);

}  // namespace lexforge
