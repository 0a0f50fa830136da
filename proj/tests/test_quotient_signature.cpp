#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lexforge/extension.hpp"
#include "lexforge/quotient.hpp"
#include "lexforge/signature.hpp"

using namespace lexforge;
using testing::make_structure;

TEST_CASE("partition of the lex model") {
  auto s = lex_model(2, 2, {Rat(0), Rat(1)});  // 00 01 10 11

  auto classes = sim_partition(s, Rat(0));  // together iff value > 0
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<PointId>{0, 1});
  CHECK(classes[1] == std::vector<PointId>{2, 3});

  CHECK(sim_partition(s, Rat(1)).size() == 4);   // nothing exceeds 1
  CHECK(sim_partition(s, Rat(-1)).size() == 1);  // everything exceeds -1

  auto ordered = class_order(s, Rat(0));
  REQUIRE(ordered.classes.size() == 2);
  CHECK(ordered.representatives == std::vector<PointId>{0, 2});
}

TEST_CASE("singleton structure has one class at any threshold") {
  auto s = make_structure("1", {});
  CHECK(class_order(s, Rat(5)).classes.size() == 1);
  CHECK(class_order(s, Rat(-5)).classes.size() == 1);
}

TEST_CASE("partition rejects invalid structures") {
  auto bad = make_structure("000", {Rat(1), Rat(2), Rat(1)});
  CHECK_THROWS_AS(sim_partition(bad, Rat(0)), Error);
  CHECK_THROWS_AS(class_order(bad, Rat(0)), Error);
}

namespace {

bool refines(const std::vector<std::vector<PointId>>& fine,
             const std::vector<std::vector<PointId>>& coarse) {
  for (const auto& cls : fine) {
    bool inside_one = false;
    for (const auto& big : coarse) {
      bool all = true;
      for (PointId p : cls) {
        if (std::find(big.begin(), big.end(), p) == big.end()) {
          all = false;
          break;
        }
      }
      if (all) inside_one = true;
    }
    if (!inside_one) return false;
  }
  return true;
}

bool classes_are_intervals(const LexStructure& s,
                           const std::vector<std::vector<PointId>>& classes) {
  int expected_pos = 0;
  for (const auto& cls : classes)
    for (PointId p : cls)
      if (s.position_of(p) != expected_pos++) return false;
  return true;
}

}  // namespace

TEST_CASE("refinement chain, interval classes, representative independence") {
  std::mt19937_64 rng(411);
  const std::vector<Rat> pool{Rat(0), Rat(1), Rat(2), Rat(7, 2)};
  for (int run = 0; run < 200; ++run) {
    auto s = random_structure(1 + int(rng() % 7), pool, rng());
    const Rat m1(-1), m2(1), m3(Rat(5, 2));
    auto p1 = sim_partition(s, m1);
    auto p2 = sim_partition(s, m2);
    auto p3 = sim_partition(s, m3);
    CHECK(refines(p2, p1));
    CHECK(refines(p3, p2));
    CHECK(classes_are_intervals(s, p1));
    CHECK(classes_are_intervals(s, p2));
    CHECK(classes_are_intervals(s, p3));

    // the induced order agrees no matter which representatives meet
    auto ordered = class_order(s, m2);
    for (std::size_t i = 0; i < ordered.classes.size(); ++i)
      for (std::size_t j = i + 1; j < ordered.classes.size(); ++j)
        for (PointId x : ordered.classes[i])
          for (PointId y : ordered.classes[j]) CHECK(s.before(x, y));
  }
}

TEST_CASE("strong vs pattern signatures") {
  auto a = lex_model(2, 2, {Rat(0), Rat(1)});
  auto b = lex_model(2, 2, {Rat(0), Rat(2)});

  CHECK(canonical_signature(a) == canonical_signature(a));
  CHECK(pattern_signature(a) == pattern_signature(a));
  CHECK(canonical_signature(a) != canonical_signature(b));
  CHECK(pattern_signature(a) == pattern_signature(b));

  // relabeled points are strong-equal
  LexStructure relabeled({{10, Color::zero}, {20, Color::zero}},
                         {{PairKey::of(10, 20), Rat(0)}});
  CHECK(canonical_signature(relabeled) ==
        canonical_signature(lex_model(2, 1, {Rat(0)})));

  // colors matter for both notions
  auto colored = testing::make_structure("01", {Rat(0)});
  CHECK(canonical_signature(colored) != canonical_signature(relabeled));
  CHECK(pattern_signature(colored) != pattern_signature(relabeled));
}
