#include "lexforge/rational.hpp"

#include <cctype>
#include <charconv>

namespace lexforge {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Rat> Rat::from_canonical_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  if (*den <= 0) return std::nullopt;
  Rat r(*num, *den);
  // Reject unreduced spellings (and oddities like "-0/1"): canonical means
  // the string round-trips exactly.
  if (r.to_string() != s) return std::nullopt;
  return r;
}

std::optional<Rat> Rat::from_flexible_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_int(s);
    if (!num) return std::nullopt;
    return Rat(*num);
  }
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rat(*num, *den);
}

}  // namespace lexforge
