#include "lexforge/analysis.hpp"

#include <algorithm>
#include <set>

#include "lexforge/extension.hpp"

namespace lexforge {

std::vector<Cut> enumerate_cuts(const LexStructure& s) {
  require_valid(s, "enumerate_cuts");
  std::vector<Cut> cuts;
  const int n = s.size();
  for (int boundary = 0; boundary <= n; ++boundary) {
    Cut cut;
    for (int i = 0; i < boundary; ++i) cut.lower.push_back(s.id_at(i));
    for (int i = boundary; i < n; ++i) cut.upper.push_back(s.id_at(i));
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

namespace {

int cut_boundary(const LexStructure& s, const Cut& cut) {
  const int n = s.size();
  if (static_cast<int>(cut.lower.size() + cut.upper.size()) != n)
    throw Error("domain", "cut does not partition the point set");
  std::set<PointId> lower(cut.lower.begin(), cut.lower.end());
  std::set<PointId> upper(cut.upper.begin(), cut.upper.end());
  for (int i = 0; i < n; ++i) {
    const bool in_lower = lower.count(s.id_at(i)) != 0;
    const bool in_upper = upper.count(s.id_at(i)) != 0;
    if (in_lower == in_upper)
      throw Error("domain", "cut does not partition the point set");
    if (in_lower != (i < static_cast<int>(cut.lower.size())))
      throw Error("domain", "cut sides are not order-separated");
  }
  return static_cast<int>(cut.lower.size());
}

}  // namespace

LexStructure insert_into_cut(const LexStructure& s, const Cut& cut, Color color,
                             std::optional<Rat> left_value,
                             std::optional<Rat> right_value) {
  require_valid(s, "insert_into_cut");
  ExtensionSpec spec{cut_boundary(s, cut), color, std::move(left_value),
                     std::move(right_value)};
  return realize_extension(s, spec);
}

LexStructure complete_structure(const LexStructure& s, const FillRule& rule) {
  require_valid(s, "complete_structure");
  FillRule fill = rule;
  if (!fill)
    fill = [](const LexStructure& host, int pos) {
      return host.f_at(pos, pos + 1);
    };

  // collect the original consecutive pairs up front; each insertion shifts
  // positions, so track the pairs by id
  std::vector<std::pair<PointId, PointId>> pairs;
  std::vector<Rat> values;
  for (int i = 0; i + 1 < s.size(); ++i) {
    pairs.emplace_back(s.id_at(i), s.id_at(i + 1));
    values.push_back(fill(s, i));
  }

  LexStructure out = s;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int pos = out.position_of(pairs[i].first);
    ExtensionSpec spec{pos + 1, Color::one, values[i], values[i]};
    out = realize_extension(out, spec);
  }
  return out;
}

LexStructure embed_linear_order(int n, const Rat& m) {
  if (n < 0) throw Error("domain", "embed_linear_order: n must be >= 0");
  std::vector<Point> points;
  std::map<PairKey, Rat> fvals;
  for (int i = 0; i < n; ++i) points.push_back({i, Color::zero});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) fvals.emplace(PairKey::of(i, j), m);
  return LexStructure(std::move(points), std::move(fvals));
}

bool supremum_condition(const LexStructure& s, PointId x,
                        const std::vector<PointId>& y_set) {
  std::set<PointId> members(y_set.begin(), y_set.end());
  for (const auto& p : s.points()) {
    if (p.id == x || members.count(p.id) || !s.before(p.id, x)) continue;
    bool beaten = false;
    for (PointId y : y_set)
      if (s.f(x, y) > s.f(x, p.id)) {
        beaten = true;
        break;
      }
    if (!beaten) return false;
  }
  return true;
}

bool check_supremum(const LexStructure& s, PointId x,
                    const std::vector<PointId>& y_set) {
  require_valid(s, "check_supremum");
  if (!s.contains(x)) throw Error("domain", "check_supremum: unknown point");
  for (PointId y : y_set)
    if (!s.contains(y) || !s.before(y, x))
      throw Error("domain", "check_supremum: Y must lie strictly below x");

  bool is_sup = true;
  for (const auto& p : s.points()) {
    if (p.id == x || !s.before(p.id, x)) continue;
    bool above_all = true;
    for (PointId y : y_set)
      if (!s.before(y, p.id)) {
        above_all = false;
        break;
      }
    if (above_all) {
      is_sup = false;
      break;
    }
  }
  if (supremum_condition(s, x, y_set) && !is_sup)
    throw std::logic_error("sufficient supremum condition fired on a non-supremum");
  return is_sup;
}

GapClass classify_gap_profile(const GapProfile& profile) {
  if (profile.fset_has_sup != profile.upperset_has_inf)
    throw Error("inconsistent_spec",
                "gap profile breaks the supremum/infimum equivalence of a "
                "dense base order");
  const bool full_witness = profile.witness_side != WitnessSide::none &&
                            profile.witness_cofinal && profile.witness_coinitial;
  if (full_witness && !profile.fset_has_sup) return GapClass::irremovable;
  if (profile.fset_has_sup) return GapClass::not_gap;
  return GapClass::removable;
}

std::vector<DensityEntry> witness_density(const LexStructure& s, PointId anchor,
                                          const std::vector<Rat>& value_set) {
  require_valid(s, "witness_density");
  const int pos = s.position_of(anchor);
  std::set<Rat> values(value_set.begin(), value_set.end());

  std::vector<DensityEntry> report;
  for (const Rat& m : values) {
    DensityEntry entry{m, {}, {}};
    for (int i = 0; i < pos && !entry.left; ++i)
      if (s.f_at(i, pos) == m) entry.left = s.id_at(i);
    for (int i = pos + 1; i < s.size() && !entry.right; ++i)
      if (s.f_at(pos, i) == m) entry.right = s.id_at(i);
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace lexforge
