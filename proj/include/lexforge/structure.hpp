#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexforge/error.hpp"
#include "lexforge/rational.hpp"

namespace lexforge {

using PointId = int;

/// Point colors: Color::one marks the points carrying the unary predicate.
enum class Color : int { zero = 0, one = 1 };

inline int to_int(Color c) { return static_cast<int>(c); }
inline Color color_from_int(int v) {
  if (v != 0 && v != 1) throw Error("parse", "color must be 0 or 1");
  return static_cast<Color>(v);
}

struct Point {
  PointId id;
  Color color;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Unordered pair of distinct point ids, normalized so lo < hi.
struct PairKey {
  PointId lo;
  PointId hi;

  static PairKey of(PointId a, PointId b) {
    if (a == b) throw Error("domain", "pair function is defined on distinct points");
    return a < b ? PairKey{a, b} : PairKey{b, a};
  }
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// A finite colored linear order with a symmetric pair function into the
/// rationals. The listing order of points() is the strict order on the
/// point set. The container itself does not enforce the min-law (or even
/// totality of the pair function); validate() reports such defects, and
/// every generator in the library only produces structures that pass it.
class LexStructure {
 public:
  LexStructure() = default;
  LexStructure(std::vector<Point> points, std::map<PairKey, Rat> fvals);

  /// Class membership, decided once at construction (structures are
  /// immutable). validate() lists the defects when this is false.
  bool is_valid() const { return valid_; }

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const std::map<PairKey, Rat>& fvalues() const { return fvals_; }

  PointId id_at(int pos) const { return points_.at(pos).id; }
  Color color_at(int pos) const { return points_.at(pos).color; }
  Color color_of(PointId id) const { return points_.at(position_of(id)).color; }

  bool contains(PointId id) const { return pos_.count(id) != 0; }
  /// Listing position of a point; throws on unknown ids. With duplicate ids
  /// (representable only through hand-built input) this is the first listing.
  int position_of(PointId id) const;
  /// Strict order: does a precede b in the listing?
  bool before(PointId a, PointId b) const {
    return position_of(a) < position_of(b);
  }

  const Rat& f(PointId a, PointId b) const;
  const Rat* f_if_present(PointId a, PointId b) const;
  const Rat& f_at(int pos_a, int pos_b) const {
    return f(id_at(pos_a), id_at(pos_b));
  }

  /// Sorted distinct pair-function values appearing in the structure.
  std::vector<Rat> used_values() const;
  /// Smallest id not yet in use (max id + 1, or 0 when empty).
  PointId fresh_id() const;
  int count_color(Color c) const;

  friend bool operator==(const LexStructure&, const LexStructure&) = default;

 private:
  bool compute_valid() const;

  std::vector<Point> points_;
  std::map<PairKey, Rat> fvals_;
  std::map<PointId, int> pos_;
  bool valid_ = true;
};

enum class ViolationKind { duplicate_id, missing_pair, min_law };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<PointId> points;
  std::optional<Rat> expected;
  std::optional<Rat> found;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Membership check for the amalgamation class: ids distinct, the pair
/// function total and symmetric on distinct pairs, and every ordered triple
/// x < y < z satisfying f(x,z) = min{f(x,y), f(y,z)}. Defects are collected
/// into the report rather than thrown.
ValidationReport validate(const LexStructure& s);

/// Independent route to the same property via the three-case form: every
/// triple x < y < z has f(x,y)=f(x,z)=f(y,z), or f(x,y)=f(x,z)<f(y,z), or
/// f(x,z)=f(y,z)<f(x,y). Agrees with validate(s).ok on all inputs.
bool check_case_form(const LexStructure& s);

/// Derived consequence of the min-law: walking toward a point from either
/// side, pair values to it never decrease. Holds on every valid structure.
bool check_monotonicity(const LexStructure& s);

/// Throws Error("invalid_structure") unless validate(s).ok.
void require_valid(const LexStructure& s, const char* who);

/// Reference model: all k^n strings over {0..k-1} in lexicographic order,
/// with f(x,y) = values[index of the first differing symbol] and every
/// point 0-colored. `values` must be strictly increasing with length n.
LexStructure lex_model(int k, int n, const std::vector<Rat>& values);

/// Induced substructure on a subset of points (ids are kept).
LexStructure restrict_to(const LexStructure& s, const std::vector<PointId>& subset);

}  // namespace lexforge
