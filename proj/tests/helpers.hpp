#pragma once

#include <map>
#include <string>
#include <vector>

#include "lexforge/extension.hpp"
#include "lexforge/structure.hpp"

namespace lexforge::testing {

/// Builds a structure with points 0..n-1 in listing order, colors from a
/// digit string, and the upper triangle of pair values row by row:
/// f(0,1), f(0,2), ..., f(0,n-1), f(1,2), ...
inline LexStructure make_structure(const std::string& colors,
                                   const std::vector<Rat>& upper) {
  const int n = static_cast<int>(colors.size());
  std::vector<Point> points;
  for (int i = 0; i < n; ++i)
    points.push_back({i, colors[i] == '1' ? Color::one : Color::zero});
  std::map<PairKey, Rat> fvals;
  std::size_t next = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) fvals.emplace(PairKey::of(i, j), upper.at(next++));
  if (next != upper.size()) throw std::logic_error("wrong number of pair values");
  return LexStructure(std::move(points), std::move(fvals));
}

/// Independent oracle for class membership: checks the min-law directly on
/// a raw symmetric value table, without going through LexStructure.
inline bool oracle_min_law(const std::vector<std::vector<Rat>>& table) {
  const std::size_t n = table.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const Rat expected =
            table[x][y] < table[y][z] ? table[x][y] : table[y][z];
        if (!(table[x][z] == expected)) return false;
      }
  return true;
}

/// Independent enumeration of all one-point superstructures of s whose new
/// row is drawn from the pool: builds every candidate directly and keeps
/// the ones that pass validate(). The new point gets id s.fresh_id() and is
/// inserted at each cut in turn.
inline std::vector<LexStructure> brute_force_extensions(
    const LexStructure& s, const std::vector<Rat>& pool) {
  std::vector<LexStructure> out;
  const int n = s.size();
  const PointId fresh = s.fresh_id();
  for (int cut = 0; cut <= n; ++cut)
    for (Color color : {Color::zero, Color::one}) {
      // every assignment of pool values to the n new pairs
      std::vector<std::size_t> index(n, 0);
      while (true) {
        std::vector<Point> points;
        for (int i = 0; i < cut; ++i) points.push_back(s.points()[i]);
        points.push_back({fresh, color});
        for (int i = cut; i < n; ++i) points.push_back(s.points()[i]);
        std::map<PairKey, Rat> fvals = s.fvalues();
        for (int i = 0; i < n; ++i)
          fvals.emplace(PairKey::of(fresh, s.id_at(i)), pool[index[i]]);
        LexStructure candidate(std::move(points), std::move(fvals));
        if (validate(candidate).ok) out.push_back(std::move(candidate));

        int wheel = 0;
        while (wheel < n && ++index[wheel] == pool.size()) index[wheel++] = 0;
        if (wheel == n) break;  // with n == 0 this emits exactly one candidate
      }
    }
  return out;
}

}  // namespace lexforge::testing
