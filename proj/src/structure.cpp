#include "lexforge/structure.hpp"

#include <algorithm>
#include <set>

namespace lexforge {

LexStructure::LexStructure(std::vector<Point> points, std::map<PairKey, Rat> fvals)
    : points_(std::move(points)), fvals_(std::move(fvals)) {
  for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
    pos_.emplace(points_[i].id, i);  // keeps the first listing on duplicates
  }
  valid_ = compute_valid();
}

bool LexStructure::compute_valid() const {
  const int n = size();
  if (static_cast<int>(pos_.size()) != n) return false;  // duplicate ids
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!f_if_present(points_[i].id, points_[j].id)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rat& xy = f_at(i, j);
      for (int k = j + 1; k < n; ++k)
        if (f_at(i, k) != min(xy, f_at(j, k))) return false;
    }
  return true;
}

int LexStructure::position_of(PointId id) const {
  auto it = pos_.find(id);
  if (it == pos_.end())
    throw Error("domain", "unknown point id " + std::to_string(id));
  return it->second;
}

const Rat& LexStructure::f(PointId a, PointId b) const {
  auto it = fvals_.find(PairKey::of(a, b));
  if (it == fvals_.end())
    throw Error("domain", "no pair value for (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
  return it->second;
}

const Rat* LexStructure::f_if_present(PointId a, PointId b) const {
  if (a == b) return nullptr;
  auto it = fvals_.find(PairKey::of(a, b));
  return it == fvals_.end() ? nullptr : &it->second;
}

std::vector<Rat> LexStructure::used_values() const {
  std::set<Rat> seen;
  for (const auto& [key, value] : fvals_) seen.insert(value);
  return {seen.begin(), seen.end()};
}

PointId LexStructure::fresh_id() const {
  PointId next = 0;
  for (const auto& p : points_) next = std::max(next, p.id + 1);
  return next;
}

int LexStructure::count_color(Color c) const {
  return static_cast<int>(
      std::count_if(points_.begin(), points_.end(),
                    [c](const Point& p) { return p.color == c; }));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_id: return "duplicate_id";
    case ViolationKind::missing_pair: return "missing_pair";
    case ViolationKind::min_law: return "min_law";
  }
  return "?";
}

ValidationReport validate(const LexStructure& s) {
  ValidationReport report;
  auto flag = [&report](Violation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };

  std::set<PointId> seen;
  for (const auto& p : s.points()) {
    if (!seen.insert(p.id).second)
      flag({ViolationKind::duplicate_id, {p.id}, {}, {}});
  }
  if (!report.ok) return report;  // positions are ambiguous past this point

  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!s.f_if_present(s.id_at(i), s.id_at(j)))
        flag({ViolationKind::missing_pair, {s.id_at(i), s.id_at(j)}, {}, {}});

  // min-law on every ordered triple; triples touching a missing pair were
  // already flagged above and are skipped here
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Rat* xy = s.f_if_present(s.id_at(i), s.id_at(j));
        const Rat* yz = s.f_if_present(s.id_at(j), s.id_at(k));
        const Rat* xz = s.f_if_present(s.id_at(i), s.id_at(k));
        if (!xy || !yz || !xz) continue;
        const Rat expected = min(*xy, *yz);
        if (*xz != expected)
          flag({ViolationKind::min_law,
                {s.id_at(i), s.id_at(j), s.id_at(k)},
                expected,
                *xz});
      }
  return report;
}

bool check_case_form(const LexStructure& s) {
  std::set<PointId> seen;
  for (const auto& p : s.points())
    if (!seen.insert(p.id).second) return false;

  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!s.f_if_present(s.id_at(i), s.id_at(j))) return false;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Rat& xy = s.f_at(i, j);
        const Rat& yz = s.f_at(j, k);
        const Rat& xz = s.f_at(i, k);
        const bool case_a = xy == xz && xz == yz;
        const bool case_b = xy == xz && xz < yz;
        const bool case_c = xz == yz && yz < xy;
        if (!case_a && !case_b && !case_c) return false;
      }
  return true;
}

bool check_monotonicity(const LexStructure& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    // below a: values must be non-decreasing approaching a
    for (int z = 0; z + 1 < a; ++z)
      if (s.f_at(z + 1, a) < s.f_at(z, a)) return false;
    // above a: non-increasing moving away from a
    for (int z = a + 1; z + 1 < n; ++z)
      if (s.f_at(a, z + 1) > s.f_at(a, z)) return false;
  }
  return true;
}

void require_valid(const LexStructure& s, const char* who) {
  if (!s.is_valid())
    throw Error("invalid_structure",
                std::string(who) + ": structure violates the class axioms");
}

LexStructure lex_model(int k, int n, const std::vector<Rat>& values) {
  if (k < 1) throw Error("domain", "lex_model: k must be >= 1");
  if (n < 0) throw Error("domain", "lex_model: n must be >= 0");
  if (static_cast<int>(values.size()) != n)
    throw Error("domain", "lex_model: need exactly n values");
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (!(values[i] < values[i + 1]))
      throw Error("domain", "lex_model: values must be strictly increasing");

  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > 200000) throw Error("domain", "lex_model: k^n too large");
  }

  // strings over {0..k-1} in lexicographic order, as digit vectors
  std::vector<Point> points;
  points.reserve(total);
  for (long long i = 0; i < total; ++i)
    points.push_back({static_cast<PointId>(i), Color::zero});

  auto digits = [&](long long x) {
    std::vector<int> d(n);
    for (int i = n - 1; i >= 0; --i) {
      d[i] = static_cast<int>(x % k);
      x /= k;
    }
    return d;
  };

  std::map<PairKey, Rat> fvals;
  for (long long i = 0; i < total; ++i) {
    auto di = digits(i);
    for (long long j = i + 1; j < total; ++j) {
      auto dj = digits(j);
      int first_diff = 0;
      while (first_diff < n && di[first_diff] == dj[first_diff]) ++first_diff;
      fvals.emplace(PairKey::of(static_cast<PointId>(i), static_cast<PointId>(j)),
                    values[first_diff]);
    }
  }
  return LexStructure(std::move(points), std::move(fvals));
}

LexStructure restrict_to(const LexStructure& s, const std::vector<PointId>& subset) {
  std::set<PointId> keep;
  for (PointId id : subset) {
    if (!s.contains(id))
      throw Error("domain", "restrict: unknown point id " + std::to_string(id));
    keep.insert(id);
  }
  std::vector<Point> points;
  for (const auto& p : s.points())
    if (keep.count(p.id)) points.push_back(p);
  std::map<PairKey, Rat> fvals;
  for (const auto& [key, value] : s.fvalues())
    if (keep.count(key.lo) && keep.count(key.hi)) fvals.emplace(key, value);
  return LexStructure(std::move(points), std::move(fvals));
}

}  // namespace lexforge
