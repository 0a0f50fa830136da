#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "lexforge/error.hpp"

namespace lexforge {

/// Exact rational number. Always kept reduced with a positive denominator,
/// so equal values have identical representations and to_string() is a
/// canonical form. All comparisons and arithmetic are exact; there is no
/// floating point anywhere in the library.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT: integers convert
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    using W = __int128;
    W lhs = W(a.num_) * W(b.den_);
    W rhs = W(b.num_) * W(a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                __int128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("domain", "rational division by zero");
    return make(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }

  /// Canonical form, always "numerator/denominator", e.g. "-3/2", "0/1".
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Strict parser for the canonical on-disk form: reduced "p/q" with q > 0.
  /// Anything else (unreduced, zero or negative denominator, missing slash,
  /// stray characters, "-0") yields nullopt.
  static std::optional<Rat> from_canonical_string(std::string_view s);

  /// Lenient parser for command-line input: accepts "p" and "p/q" with any
  /// sign placement, and normalizes.
  static std::optional<Rat> from_flexible_string(std::string_view s);

 private:
  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw Error("domain", "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw Error("domain", "rational overflow");
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    if (den_ == 0) throw Error("domain", "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace lexforge

template <>
struct std::hash<lexforge::Rat> {
  std::size_t operator()(const lexforge::Rat& r) const {
    std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};
