#include "lexforge/signature.hpp"

#include <algorithm>

namespace lexforge {

namespace {

std::string render(const LexStructure& s, bool by_rank) {
  std::vector<Rat> values = s.used_values();
  auto rank_of = [&values](const Rat& v) {
    return std::lower_bound(values.begin(), values.end(), v) - values.begin();
  };

  std::string out = "n=" + std::to_string(s.size()) + ";c=";
  for (const auto& p : s.points()) out += std::to_string(to_int(p.color));
  out += ";f=";
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rat& v = s.f_at(i, j);
      out += by_rank ? std::to_string(rank_of(v)) : v.to_string();
      out += ",";
    }
  return out;
}

}  // namespace

std::string canonical_signature(const LexStructure& s) {
  require_valid(s, "canonical_signature");
  return render(s, /*by_rank=*/false);
}

std::string pattern_signature(const LexStructure& s) {
  require_valid(s, "pattern_signature");
  return render(s, /*by_rank=*/true);
}

}  // namespace lexforge
