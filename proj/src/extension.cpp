#include "lexforge/extension.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lexforge {

std::vector<ExtensionSpec> enumerate_extensions(const LexStructure& s,
                                                const std::vector<Rat>& value_set) {
  require_valid(s, "enumerate_extensions");

  std::set<Rat> pool_set(value_set.begin(), value_set.end());
  for (const Rat& v : s.used_values()) pool_set.insert(v);
  const std::vector<Rat> pool(pool_set.begin(), pool_set.end());

  const int n = s.size();
  std::vector<ExtensionSpec> specs;
  for (int cut = 0; cut <= n; ++cut) {
    const bool has_left = cut > 0;
    const bool has_right = cut < n;
    for (Color color : {Color::zero, Color::one}) {
      if (!has_left && !has_right) {
        specs.push_back({cut, color, {}, {}});
        continue;
      }
      if (!has_right) {
        for (const Rat& p : pool) specs.push_back({cut, color, p, {}});
        continue;
      }
      if (!has_left) {
        for (const Rat& q : pool) specs.push_back({cut, color, {}, q});
        continue;
      }
      const Rat& across = s.f_at(cut - 1, cut);
      for (const Rat& p : pool)
        for (const Rat& q : pool)
          if (min(p, q) == across) specs.push_back({cut, color, p, q});
    }
  }
  return specs;
}

std::optional<std::string> spec_inconsistency(const LexStructure& s,
                                              const ExtensionSpec& spec) {
  const int n = s.size();
  if (spec.cut_index < 0 || spec.cut_index > n)
    return "cut index " + std::to_string(spec.cut_index) + " outside 0.." +
           std::to_string(n);
  const bool has_left = spec.cut_index > 0;
  const bool has_right = spec.cut_index < n;
  if (has_left != spec.left_value.has_value())
    return has_left ? "missing left boundary value"
                    : "left boundary value given for an empty lower side";
  if (has_right != spec.right_value.has_value())
    return has_right ? "missing right boundary value"
                     : "right boundary value given for an empty upper side";
  if (has_left && has_right) {
    const Rat& across = s.f_at(spec.cut_index - 1, spec.cut_index);
    if (min(*spec.left_value, *spec.right_value) != across)
      return "min(left,right) = " +
             min(*spec.left_value, *spec.right_value).to_string() +
             " but the cut forces " + across.to_string();
  }
  return std::nullopt;
}

LexStructure realize_extension(const LexStructure& s, const ExtensionSpec& spec) {
  require_valid(s, "realize_extension");
  if (auto reason = spec_inconsistency(s, spec))
    throw Error("inconsistent_spec", "realize_extension: " + *reason);

  const int n = s.size();
  const int cut = spec.cut_index;
  const PointId b = s.fresh_id();

  std::vector<Point> points;
  points.reserve(n + 1);
  for (int i = 0; i < cut; ++i) points.push_back(s.points()[i]);
  points.push_back({b, spec.color});
  for (int i = cut; i < n; ++i) points.push_back(s.points()[i]);

  std::map<PairKey, Rat> fvals = s.fvalues();
  if (cut > 0) {
    const PointId max_lower = s.id_at(cut - 1);
    fvals.emplace(PairKey::of(b, max_lower), *spec.left_value);
    for (int i = 0; i < cut - 1; ++i)
      fvals.emplace(PairKey::of(b, s.id_at(i)),
                    min(*spec.left_value, s.f_at(i, cut - 1)));
  }
  if (cut < n) {
    const PointId min_upper = s.id_at(cut);
    fvals.emplace(PairKey::of(b, min_upper), *spec.right_value);
    for (int i = cut + 1; i < n; ++i)
      fvals.emplace(PairKey::of(b, s.id_at(i)),
                    min(*spec.right_value, s.f_at(cut, i)));
  }
  return LexStructure(std::move(points), std::move(fvals));
}

LexStructure random_structure(int n, const std::vector<Rat>& value_pool,
                              std::uint64_t seed) {
  if (n < 0) throw Error("domain", "random_structure: n must be >= 0");
  if (n >= 2 && value_pool.empty())
    throw Error("domain", "random_structure: empty value pool with n >= 2");

  std::mt19937_64 rng(seed);
  LexStructure s;
  for (int step = 0; step < n; ++step) {
    auto specs = enumerate_extensions(s, value_pool);
    std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
    s = realize_extension(s, specs[pick(rng)]);
  }
  return s;
}

}  // namespace lexforge
