#include "lexforge/quotient.hpp"

namespace lexforge {

std::vector<std::vector<PointId>> sim_partition(const LexStructure& s, const Rat& m) {
  require_valid(s, "sim_partition");
  std::vector<std::vector<PointId>> classes;
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    // classes are intervals: consecutive points stay together iff f > m
    if (i == 0 || !(s.f_at(i - 1, i) > m)) classes.emplace_back();
    classes.back().push_back(s.id_at(i));
  }
  return classes;
}

OrderedClasses class_order(const LexStructure& s, const Rat& m) {
  OrderedClasses out;
  out.classes = sim_partition(s, m);
  for (const auto& cls : out.classes) out.representatives.push_back(cls.front());
  return out;
}

}  // namespace lexforge
