#include "lexforge/amalgam.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lexforge {

namespace {

LexStructure rename_points(const LexStructure& s,
                           const std::map<PointId, PointId>& rename) {
  auto image = [&rename](PointId id) {
    auto it = rename.find(id);
    return it == rename.end() ? id : it->second;
  };
  std::vector<Point> points;
  points.reserve(s.size());
  for (const auto& p : s.points()) points.push_back({image(p.id), p.color});
  std::map<PairKey, Rat> fvals;
  for (const auto& [key, value] : s.fvalues())
    fvals.emplace(PairKey::of(image(key.lo), image(key.hi)), value);
  return LexStructure(std::move(points), std::move(fvals));
}

void require_margins(const AmalgamStrategy& strategy) {
  if (strategy.m1_margin_both < Rat(0) || strategy.m1_margin_single < Rat(0))
    throw Error("domain", "amalgamation margins must be >= 0");
  if (strategy.c0_split < 0)
    throw Error("domain", "c0_split must be >= 0");
}

struct Placement {
  bool below;  // does this point precede the new one?
  Rat value;
};

}  // namespace

Amalgam joint_embed(const LexStructure& b, const LexStructure& c) {
  require_valid(b, "joint_embed");
  require_valid(c, "joint_embed");

  // keep ids; remap only C ids that collide with B
  std::set<PointId> taken;
  for (const auto& p : b.points()) taken.insert(p.id);
  for (const auto& p : c.points()) taken.insert(p.id);
  PointId next = taken.empty() ? 0 : *taken.rbegin() + 1;
  std::map<PointId, PointId> c_rename;
  for (const auto& p : c.points())
    if (b.contains(p.id)) c_rename.emplace(p.id, next++);
  const LexStructure c2 = rename_points(c, c_rename);

  // fresh low value: below everything either side uses
  std::optional<Rat> lowest;
  for (const LexStructure* side : {&b, &c})
    for (const Rat& v : side->used_values())
      if (!lowest || v < *lowest) lowest = v;
  const Rat cross = lowest ? *lowest - Rat(1) : Rat(0);

  std::vector<Point> points;
  points.reserve(b.size() + c2.size());
  for (const auto& p : b.points()) points.push_back(p);
  for (const auto& p : c2.points()) points.push_back(p);

  std::map<PairKey, Rat> fvals = b.fvalues();
  for (const auto& [key, value] : c2.fvalues()) fvals.emplace(key, value);
  for (const auto& pb : b.points())
    for (const auto& pc : c2.points())
      fvals.emplace(PairKey::of(pb.id, pc.id), cross);

  Amalgam out;
  out.result = LexStructure(std::move(points), std::move(fvals));
  out.emb_b = identity_embedding(b);
  for (const auto& p : c.points()) {
    auto it = c_rename.find(p.id);
    out.emb_c.map.emplace(p.id, it == c_rename.end() ? p.id : it->second);
  }
  if (!validate(out.result).ok)
    throw std::logic_error("joint_embed produced an invalid structure");
  return out;
}

Amalgam amalgamate_point(const LexStructure& a, const LexStructure& b,
                         const LexStructure& c,
                         const AmalgamStrategy& strategy, AmalgamStats* stats) {
  require_valid(a, "amalgamate_point");
  require_valid(b, "amalgamate_point");
  require_valid(c, "amalgamate_point");
  require_margins(strategy);

  if (!is_identity_substructure(a, b) || b.size() != a.size() + 1)
    throw Error("domain", "amalgamate_point: B must be A plus exactly one point");
  if (!is_identity_substructure(a, c))
    throw Error("domain", "amalgamate_point: A must be a substructure of C");

  // the one new point of B
  PointId b_id = -1;
  for (const auto& p : b.points())
    if (!a.contains(p.id)) b_id = p.id;
  const Color b_color = b.color_of(b_id);

  if (a.empty()) {
    // no common part to amalgamate over: this is joint embedding
    return joint_embed(b, c);
  }

  // m0 = max pair value from the new point into A, and the boundary of the
  // tied set on each side of the new point
  Rat m0 = b.f(b_id, a.id_at(0));
  for (int i = 1; i < a.size(); ++i) m0 = max(m0, b.f(b_id, a.id_at(i)));

  std::optional<PointId> l, u;  // greatest tied point below, least above
  for (int i = 0; i < a.size(); ++i) {
    PointId aid = a.id_at(i);
    if (b.f(b_id, aid) != m0) continue;
    if (b.before(aid, b_id)) l = aid;            // listing order: last wins
    else if (!u) u = aid;                        // first one above
  }

  // place every point of C \ A relative to the new point
  std::map<PointId, Placement> placed;
  std::vector<PointId> middle;  // undetermined points, in listing order
  for (const auto& pc : c.points()) {
    if (a.contains(pc.id)) continue;
    std::optional<Placement> from_left, from_right;
    if (l) {
      const Rat& flc = c.f(*l, pc.id);
      if (flc > m0 || c.before(pc.id, *l)) {
        from_left = Placement{true, min(flc, m0)};
      } else if (flc < m0) {
        from_left = Placement{false, flc};
      }
    }
    if (u) {
      const Rat& fuc = c.f(*u, pc.id);
      if (fuc > m0 || c.before(*u, pc.id)) {
        from_right = Placement{false, min(fuc, m0)};
      } else if (fuc < m0) {
        from_right = Placement{true, fuc};
      }
    }
    if (from_left && from_right) {
      // the two directional rules overlap; they must agree
      if (from_left->below != from_right->below ||
          from_left->value != from_right->value)
        throw std::logic_error("amalgamation: directional rules disagree");
      if (stats) ++stats->case_overlap_checks;
    }
    if (from_left || from_right) {
      placed.emplace(pc.id, from_left ? *from_left : *from_right);
    } else {
      // tied to the boundary at exactly m0, strictly between l and u
      const bool position_ok = (!l || c.before(*l, pc.id)) &&
                               (!u || c.before(pc.id, *u));
      const bool tied_at_m0 = (l && c.f(*l, pc.id) == m0) ||
                              (u && c.f(*u, pc.id) == m0);
      if (!position_ok || !tied_at_m0)
        throw std::logic_error("amalgamation: case analysis missed a point");
      middle.push_back(pc.id);
    }
  }

  // middle points: pairwise values sit at or above m0
  for (std::size_t i = 0; i < middle.size(); ++i)
    for (std::size_t j = i + 1; j < middle.size(); ++j) {
      if (c.f(middle[i], middle[j]) < m0)
        throw std::logic_error("amalgamation: middle pair below m0");
      if (stats) ++stats->c0_pairs_checked;
    }

  if (!middle.empty()) {
    const std::size_t split =
        std::min<std::size_t>(strategy.c0_split, middle.size());
    std::vector<PointId> lower(middle.begin(), middle.begin() + split);
    std::vector<PointId> upper(middle.begin() + split, middle.end());

    PointId pivot;
    Rat m1{0};
    if (!lower.empty() && !upper.empty()) {
      pivot = lower.back();
      m1 = c.f(lower.back(), upper.front()) + strategy.m1_margin_both;
    } else if (!lower.empty()) {
      pivot = lower.back();
      m1 = m0 + strategy.m1_margin_single;
    } else {
      pivot = upper.front();
      m1 = m0 + strategy.m1_margin_single;
    }
    for (PointId d : lower) {
      placed.emplace(d, Placement{true, d == pivot ? m1 : min(m1, c.f(d, pivot))});
    }
    for (PointId e : upper) {
      placed.emplace(e, Placement{false, e == pivot ? m1 : min(m1, c.f(e, pivot))});
    }
  }

  // the new point's position: after everything placed below it
  int below_count = 0;
  for (const auto& pc : c.points()) {
    const bool below = a.contains(pc.id) ? b.before(pc.id, b_id)
                                         : placed.at(pc.id).below;
    if (below) ++below_count;
  }
  // coherence: the below set must be an initial segment of C's listing
  for (int i = 0; i < c.size(); ++i) {
    PointId id = c.id_at(i);
    const bool below =
        a.contains(id) ? b.before(id, b_id) : placed.at(id).below;
    if (below != (i < below_count))
      throw std::logic_error("amalgamation: placement is not a cut of C");
  }

  const PointId b_new = c.contains(b_id) ? c.fresh_id() : b_id;

  std::vector<Point> points;
  points.reserve(c.size() + 1);
  for (int i = 0; i < below_count; ++i) points.push_back(c.points()[i]);
  points.push_back({b_new, b_color});
  for (int i = below_count; i < c.size(); ++i) points.push_back(c.points()[i]);

  std::map<PairKey, Rat> fvals = c.fvalues();
  for (const auto& pc : c.points()) {
    const Rat& value =
        a.contains(pc.id) ? b.f(pc.id, b_id) : placed.at(pc.id).value;
    fvals.emplace(PairKey::of(pc.id, b_new), value);
  }

  Amalgam out;
  out.result = LexStructure(std::move(points), std::move(fvals));
  for (const auto& p : a.points()) out.emb_b.map.emplace(p.id, p.id);
  out.emb_b.map.emplace(b_id, b_new);
  out.emb_c = identity_embedding(c);

  if (!validate(out.result).ok)
    throw std::logic_error("amalgamate_point produced an invalid structure");
  return out;
}

Amalgam amalgamate(const LexStructure& a, const LexStructure& b,
                   const LexStructure& c, const AmalgamStrategy& strategy,
                   AmalgamStats* stats) {
  require_valid(a, "amalgamate");
  require_valid(b, "amalgamate");
  require_valid(c, "amalgamate");
  require_margins(strategy);

  if (!is_identity_substructure(a, b))
    throw Error("domain", "amalgamate: A must be a substructure of B");
  if (!is_identity_substructure(a, c))
    throw Error("domain", "amalgamate: A must be a substructure of C");

  if (a.empty() && !b.empty() && !c.empty()) return joint_embed(b, c);

  Amalgam out;
  out.result = c;
  out.emb_c = identity_embedding(c);
  for (const auto& p : a.points()) out.emb_b.map.emplace(p.id, p.id);

  std::vector<PointId> handled;  // b-ids already amalgamated, in listing order
  for (const auto& p : a.points()) handled.push_back(p.id);

  for (const auto& p : b.points()) {
    if (a.contains(p.id)) continue;

    // current slice of B, renamed into the coordinates of the result so far
    std::vector<PointId> slice = handled;
    slice.push_back(p.id);
    const PointId tmp_id =
        out.result.contains(p.id) ? out.result.fresh_id() : p.id;
    std::map<PointId, PointId> rename = out.emb_b.map;
    rename[p.id] = tmp_id;
    const LexStructure b_cur = rename_points(restrict_to(b, slice), rename);

    std::vector<PointId> base_ids;
    for (PointId id : handled) base_ids.push_back(out.emb_b.map.at(id));
    const LexStructure a_cur = restrict_to(out.result, base_ids);

    Amalgam step = amalgamate_point(a_cur, b_cur, out.result, strategy, stats);
    out.result = std::move(step.result);
    out.emb_b.map[p.id] = step.emb_b.at(tmp_id);
    handled.push_back(p.id);
  }

  if (out.result.size() != b.size() + c.size() - a.size())
    throw std::logic_error("amalgamate: size mismatch");
  return out;
}

}  // namespace lexforge
