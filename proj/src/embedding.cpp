#include "lexforge/embedding.hpp"

#include <set>

namespace lexforge {

Embedding identity_embedding(const LexStructure& s) {
  Embedding e;
  for (const auto& p : s.points()) e.map.emplace(p.id, p.id);
  return e;
}

bool is_embedding(const LexStructure& src, const LexStructure& dst, const Embedding& e) {
  std::set<PointId> images;
  for (const auto& p : src.points()) {
    auto it = e.map.find(p.id);
    if (it == e.map.end()) return false;
    if (!dst.contains(it->second)) return false;
    if (!images.insert(it->second).second) return false;  // not injective
    if (dst.color_of(it->second) != p.color) return false;
  }
  const int n = src.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PointId a = src.id_at(i), b = src.id_at(j);
      PointId fa = e.map.at(a), fb = e.map.at(b);
      if (!dst.before(fa, fb)) return false;
      const Rat* v = dst.f_if_present(fa, fb);
      const Rat* w = src.f_if_present(a, b);
      if (!v || !w || !(*v == *w)) return false;
    }
  return true;
}

bool is_identity_substructure(const LexStructure& src, const LexStructure& dst) {
  for (const auto& p : src.points())
    if (!dst.contains(p.id)) return false;
  return is_embedding(src, dst, identity_embedding(src));
}

}  // namespace lexforge
