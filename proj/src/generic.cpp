#include "lexforge/generic.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace lexforge {

namespace {

void check_demand_anchors(const LexStructure& s, const Demand& d) {
  if (!s.contains(d.anchor))
    throw Error("domain", "demand anchor " + std::to_string(d.anchor) +
                              " is not in the structure");
  if (d.kind == DemandKind::two_star) {
    if (!d.anchor2 || !s.contains(*d.anchor2))
      throw Error("domain", "interval demand needs two anchors in the structure");
    if (!s.before(d.anchor, *d.anchor2))
      throw Error("domain", "interval demand anchors must be listed in order");
    if (d.value < s.f(d.anchor, *d.anchor2))
      throw Error("domain",
                  "interval demand value below the anchor pair value " +
                      s.f(d.anchor, *d.anchor2).to_string());
  }
}

/// Pair value the realized point would have to an existing point, read off
/// the spec without materializing the extension.
Rat realized_value_to(const LexStructure& s, const ExtensionSpec& spec, int pos) {
  if (pos < spec.cut_index) {
    if (pos == spec.cut_index - 1) return *spec.left_value;
    return min(*spec.left_value, s.f_at(pos, spec.cut_index - 1));
  }
  if (pos == spec.cut_index) return *spec.right_value;
  return min(*spec.right_value, s.f_at(spec.cut_index, pos));
}

bool spec_meets_demand(const LexStructure& s, const ExtensionSpec& spec,
                       const Demand& d) {
  if (spec.color != d.color) return false;
  const int anchor_pos = s.position_of(d.anchor);
  if (d.kind == DemandKind::one_star) {
    const bool on_side = d.side == Side::left ? spec.cut_index <= anchor_pos
                                              : spec.cut_index > anchor_pos;
    return on_side && realized_value_to(s, spec, anchor_pos) == d.value;
  }
  const int upper_pos = s.position_of(*d.anchor2);
  if (spec.cut_index <= anchor_pos || spec.cut_index > upper_pos) return false;
  const int tied_pos = d.side == Side::left ? anchor_pos : upper_pos;
  return realized_value_to(s, spec, tied_pos) == d.value;
}

void assert_forced_complement(const LexStructure& s, const Demand& d, PointId z) {
  if (d.kind != DemandKind::two_star) return;
  const Rat& base = s.f(d.anchor, *d.anchor2);
  const PointId other = d.side == Side::left ? *d.anchor2 : d.anchor;
  if (d.value > base && s.f(z, other) != base)
    throw std::logic_error("interval witness misses its forced value");
  if (min(s.f(z, d.anchor), s.f(z, *d.anchor2)) != base)
    throw std::logic_error("interval witness breaks the min-law");
}

}  // namespace

std::optional<PointId> find_witness(const LexStructure& s, const Demand& d) {
  require_valid(s, "find_witness");
  check_demand_anchors(s, d);

  const int anchor_pos = s.position_of(d.anchor);
  int lo = 0, hi = s.size();  // candidate position range [lo, hi)
  PointId tied = d.anchor;
  if (d.kind == DemandKind::one_star) {
    if (d.side == Side::left) hi = anchor_pos;
    else lo = anchor_pos + 1;
  } else {
    lo = anchor_pos + 1;
    hi = s.position_of(*d.anchor2);
    tied = d.side == Side::left ? d.anchor : *d.anchor2;
  }
  for (int pos = lo; pos < hi; ++pos) {
    const PointId z = s.id_at(pos);
    if (s.color_at(pos) != d.color) continue;
    if (s.f(z, tied) != d.value) continue;
    assert_forced_complement(s, d, z);
    return z;
  }
  return std::nullopt;
}

namespace {

/// All extension specs that would discharge the demand.
std::vector<ExtensionSpec> discharge_candidates(const LexStructure& s,
                                                const Demand& d,
                                                const std::vector<Rat>& value_set) {
  std::vector<Rat> pool = value_set;
  pool.push_back(d.value);
  std::vector<ExtensionSpec> out;
  for (const ExtensionSpec& spec : enumerate_extensions(s, pool))
    if (spec_meets_demand(s, spec, d)) out.push_back(spec);
  return out;
}

/// Deterministic tiebreak within one cut: the smallest boundary pair.
const ExtensionSpec* least_at_cut(const std::vector<ExtensionSpec>& specs, int cut) {
  const ExtensionSpec* best = nullptr;
  for (const auto& spec : specs) {
    if (spec.cut_index != cut) continue;
    if (!best || std::tie(spec.left_value, spec.right_value) <
                     std::tie(best->left_value, best->right_value))
      best = &spec;
  }
  return best;
}

/// The distinct (side, pair value, color) combinations the realized witness
/// would see around itself. Placements are ranked by this neighborhood:
/// richer neighborhoods first, so independent runs agree on which
/// neighborhood shapes get realized, with rng only breaking ties between
/// placements that look identical from the witness's seat.
using Inventory = std::set<std::tuple<bool, Rat, Color>>;

Inventory witness_inventory(const LexStructure& s, const ExtensionSpec& spec) {
  Inventory seen;
  for (int pos = 0; pos < s.size(); ++pos)
    seen.insert({pos < spec.cut_index, realized_value_to(s, spec, pos),
                 s.color_at(pos)});
  return seen;
}

struct DemandOrder {
  int birth;  // latest birth among the anchors
  Demand demand;
  friend bool operator<(const DemandOrder& a, const DemandOrder& b) {
    return std::tie(a.birth, a.demand) < std::tie(b.birth, b.demand);
  }
};

}  // namespace

SaturationResult saturate(const LexStructure& seed,
                          const std::vector<Rat>& value_set, int rounds,
                          std::uint64_t rng_seed) {
  require_valid(seed, "saturate");
  if (rounds < 0) throw Error("domain", "saturate: rounds must be >= 0");

  std::set<Rat> values(value_set.begin(), value_set.end());
  SaturationResult out;
  out.structure = seed;
  out.log.rounds = rounds;
  for (const auto& p : seed.points()) out.log.births.emplace(p.id, 0);

  std::mt19937_64 rng(rng_seed);

  for (int round = 1; round <= rounds; ++round) {
    // anchors: everything born strictly before this round
    std::vector<PointId> anchors;
    for (const auto& p : out.structure.points())
      if (out.log.births.at(p.id) < round) anchors.push_back(p.id);

    std::vector<DemandOrder> demands;
    auto birth_of = [&](PointId id) { return out.log.births.at(id); };
    for (PointId x : anchors)
      for (Side side : {Side::left, Side::right})
        for (const Rat& m : values)
          for (Color color : {Color::zero, Color::one})
            demands.push_back(
                {birth_of(x), {DemandKind::one_star, x, {}, side, m, color}});
    for (PointId x : anchors)
      for (PointId y : anchors) {
        if (x == y || !out.structure.before(x, y)) continue;
        const Rat base = out.structure.f(x, y);
        for (const Rat& m : values) {
          if (m < base) continue;
          for (Side side : {Side::left, Side::right})
            for (Color color : {Color::zero, Color::one})
              demands.push_back({std::max(birth_of(x), birth_of(y)),
                                 {DemandKind::two_star, x, y, side, m, color}});
        }
      }
    std::sort(demands.begin(), demands.end());

    for (const auto& [birth, demand] : demands) {
      if (find_witness(out.structure, demand)) {
        out.log.satisfied.insert(demand);
        continue;
      }
      auto candidates = discharge_candidates(out.structure, demand, value_set);
      if (candidates.empty())
        throw std::logic_error("saturate: demand with no discharge");

      ExtensionSpec spec;
      if (demand.kind == DemandKind::two_star) {
        // place the witness as close to its tied anchor as the values allow
        std::vector<int> cuts;
        for (const auto& c : candidates)
          if (cuts.empty() || cuts.back() != c.cut_index)
            cuts.push_back(c.cut_index);
        const int cut = demand.side == Side::left ? cuts.front() : cuts.back();
        spec = *least_at_cut(candidates, cut);
      } else {
        // keep only the placements with the richest witness neighborhood;
        // among equally rich shapes, the smallest shape is canonical, and
        // rng draws between cuts realizing that same shape
        std::map<Inventory, std::vector<ExtensionSpec>> by_shape;
        std::size_t best = 0;
        for (const auto& c : candidates) {
          Inventory shape = witness_inventory(out.structure, c);
          best = std::max(best, shape.size());
          by_shape[std::move(shape)].push_back(c);
        }
        const std::vector<ExtensionSpec>* richest = nullptr;
        for (const auto& [shape, specs] : by_shape)
          if (shape.size() == best) {
            richest = &specs;
            break;
          }
        std::vector<int> cuts;
        for (const auto& c : *richest)
          if (cuts.empty() || cuts.back() != c.cut_index)
            cuts.push_back(c.cut_index);
        const int cut = cuts[rng() % cuts.size()];
        spec = *least_at_cut(*richest, cut);
      }
      const PointId born = out.structure.fresh_id();
      out.structure = realize_extension(out.structure, spec);
      out.log.births.emplace(born, round);
      ++out.log.added;
      if (!find_witness(out.structure, demand))
        throw std::logic_error("saturate: discharge failed to create a witness");
      out.log.satisfied.insert(demand);
    }
  }
  return out;
}

AxiomReport check_extension_axioms(const LexStructure& s,
                                   const std::vector<Rat>& value_set,
                                   const GenerationFilter& filter) {
  require_valid(s, "check_extension_axioms");
  std::set<Rat> values(value_set.begin(), value_set.end());

  std::vector<PointId> anchors;
  for (const auto& p : s.points())
    if (!filter || filter(p.id)) anchors.push_back(p.id);

  AxiomReport report;
  auto probe = [&](const Demand& d) {
    if (!find_witness(s, d)) {
      report.holds = false;
      report.failures.push_back(d);
    }
  };
  for (PointId x : anchors)
    for (Side side : {Side::left, Side::right})
      for (const Rat& m : values)
        for (Color color : {Color::zero, Color::one})
          probe({DemandKind::one_star, x, {}, side, m, color});
  for (PointId x : anchors)
    for (PointId y : anchors) {
      if (x == y || !s.before(x, y)) continue;
      const Rat base = s.f(x, y);
      for (const Rat& m : values) {
        if (m < base) continue;
        for (Side side : {Side::left, Side::right})
          for (Color color : {Color::zero, Color::one})
            probe({DemandKind::two_star, x, y, side, m, color});
      }
    }
  return report;
}

namespace {

// type of a point relative to the chosen tuple: color, then order and
// exact pair value against each chosen point
using MoveType = std::pair<Color, std::vector<std::pair<bool, Rat>>>;

struct Game {
  const LexStructure* s[2];
  int k;
  std::set<Rat> allowed;

  bool value_ok(const LexStructure& side, PointId p,
                const std::vector<PointId>& chosen) const {
    for (PointId a : chosen)
      if (!allowed.count(side.f(p, a))) return false;
    return true;
  }

  std::optional<MoveType> type_of(const LexStructure& side, PointId p,
                                  const std::vector<PointId>& chosen) const {
    MoveType t;
    t.first = side.color_of(p);
    for (PointId a : chosen) {
      if (p == a) return std::nullopt;
      const Rat& v = side.f(p, a);
      if (!allowed.count(v)) return std::nullopt;
      t.second.emplace_back(side.before(p, a), v);
    }
    return t;
  }

  std::set<MoveType> realized_types(int which,
                                    const std::vector<PointId>& chosen) const {
    std::set<MoveType> types;
    for (const auto& p : s[which]->points())
      if (auto t = type_of(*s[which], p.id, chosen)) types.insert(*t);
    return types;
  }

  bool duplicator_wins(std::vector<PointId>& c1, std::vector<PointId>& c2,
                       int depth) const {
    if (depth == k) return true;
    if (depth == k - 1) {
      // last round: the second player survives iff the same move types are
      // realized over both chosen tuples
      return realized_types(0, c1) == realized_types(1, c2);
    }
    for (int side = 0; side < 2; ++side) {
      const LexStructure& from = *s[side];
      const LexStructure& to = *s[1 - side];
      auto& chosen_from = side == 0 ? c1 : c2;
      auto& chosen_to = side == 0 ? c2 : c1;

      for (const auto& move : from.points()) {
        auto move_type = type_of(from, move.id, chosen_from);
        if (!move_type) continue;  // already chosen or outside the move pool
        bool answered = false;
        for (const auto& response : to.points()) {
          auto response_type = type_of(to, response.id, chosen_to);
          if (!response_type || *response_type != *move_type) continue;
          chosen_from.push_back(move.id);
          chosen_to.push_back(response.id);
          const bool wins = duplicator_wins(c1, c2, depth + 1);
          chosen_from.pop_back();
          chosen_to.pop_back();
          if (wins) {
            answered = true;
            break;
          }
        }
        if (!answered) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool ef_game(const LexStructure& s1, const LexStructure& s2, int k,
             const std::vector<Rat>& value_set) {
  require_valid(s1, "ef_game");
  require_valid(s2, "ef_game");
  if (k < 0) throw Error("domain", "ef_game: k must be >= 0");
  if (k == 0) return true;
  if (s1 == s2) return true;  // identity strategy

  Game game;
  game.s[0] = &s1;
  game.s[1] = &s2;
  game.k = k;
  for (const Rat& v : value_set) game.allowed.insert(v);
  for (const Rat& v : s1.used_values()) game.allowed.insert(v);
  for (const Rat& v : s2.used_values()) game.allowed.insert(v);

  std::vector<PointId> c1, c2;
  return game.duplicator_wins(c1, c2, 0);
}

}  // namespace lexforge
