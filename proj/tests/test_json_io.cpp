#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lexforge/amalgam.hpp"
#include "lexforge/extension.hpp"
#include "lexforge/generic.hpp"
#include "lexforge/json_io.hpp"
#include "lexforge/tree.hpp"

using namespace lexforge;
using testing::make_structure;

TEST_CASE("structure serialization round-trips bit-exactly") {
  std::mt19937_64 rng(606);
  const std::vector<Rat> pool{Rat(0), Rat(1), Rat(-3, 2)};
  for (int run = 0; run < 50; ++run) {
    auto s = random_structure(int(rng() % 7), pool, rng());
    const std::string text = dump_json(to_json(s));
    auto back = structure_from_json(parse_json_text(text));
    CHECK(back == s);
    CHECK(dump_json(to_json(back)) == text);
  }
}

TEST_CASE("reader rejects broken rationals and pair entries") {
  auto parse = [](const std::string& text) {
    return structure_from_json(parse_json_text(text));
  };
  const std::string head = R"({"points":[{"id":0,"color":0},{"id":1,"color":1}],"f":)";

  CHECK(parse(head + R"([[0,1,"1/2"]]})").f(0, 1) == Rat(1, 2));
  CHECK_THROWS_AS(parse(head + R"([[0,1,"2/4"]]})"), Error);   // unreduced
  CHECK_THROWS_AS(parse(head + R"([[0,1,"1/0"]]})"), Error);   // zero denominator
  CHECK_THROWS_AS(parse(head + R"([[0,1,"1/-2"]]})"), Error);  // negative denominator
  CHECK_THROWS_AS(parse(head + R"([[0,1,0.5]]})"), Error);     // not a string
  CHECK_THROWS_AS(parse(head + R"([[0,0,"1/2"]]})"), Error);   // self pair
  CHECK_THROWS_AS(parse(head + R"([[0,7,"1/2"]]})"), Error);   // unknown id
  CHECK_THROWS_AS(parse(head + R"([[0,1,"1/2"],[1,0,"1/2"]]})"), Error);  // dup
  CHECK_THROWS_AS(parse(R"({"points":[{"id":0}],"f":[]})"), Error);
  CHECK_THROWS_AS(parse(R"({"points":[{"id":0,"color":3}],"f":[]})"), Error);
  CHECK_THROWS_AS(parse("[1,2,3]"), Error);
  CHECK_THROWS_AS(parse_json_text("{nope"), Error);
}

TEST_CASE("duplicate ids and missing pairs load and fail validation") {
  auto dup = structure_from_json(parse_json_text(
      R"({"points":[{"id":0,"color":0},{"id":0,"color":0}],"f":[]})"));
  CHECK(!validate(dup).ok);

  auto missing = structure_from_json(parse_json_text(
      R"({"points":[{"id":0,"color":0},{"id":1,"color":0}],"f":[]})"));
  CHECK(!validate(missing).ok);
  CHECK(validate(missing).violations[0].kind == ViolationKind::missing_pair);
}

TEST_CASE("saturation bundles carry the structure and its births") {
  auto out = saturate(make_structure("0", {}), {Rat(0)}, 1, 5);
  const std::string text = dump_json(to_json(out));
  auto bundle = saturation_from_json(parse_json_text(text));
  CHECK(bundle.structure == out.structure);
  CHECK(bundle.log.births == out.log.births);
  CHECK(bundle.log.rounds == out.log.rounds);
  CHECK(bundle.log.added == out.log.added);

  // structure readers accept both bare structures and bundles
  CHECK(structure_or_bundle_from_json(parse_json_text(text)) == out.structure);
  CHECK(structure_or_bundle_from_json(to_json(out.structure)) == out.structure);
}

TEST_CASE("tree parsing") {
  auto tree = tree_from_json(parse_json_text("[[],[[],[]]]"));
  CHECK(tree.node_count() == 5);
  CHECK(tree.leaf_count() == 3);
  CHECK(dump_json(to_json(tree)) == dump_json(parse_json_text("[[],[[],[]]]")));
  CHECK_THROWS_AS(tree_from_json(parse_json_text(R"({"a":1})")), Error);
}

TEST_CASE("amalgam and report serialization shapes") {
  auto a = make_structure("0", {});
  auto b = realize_extension(a, {1, Color::zero, Rat(2), {}});
  auto c = realize_extension(a, {0, Color::one, {}, Rat(1)});
  auto am = amalgamate_point(a, b, c);
  auto j = to_json(am);
  CHECK(j.contains("result"));
  CHECK(j["emb_b"].size() == 2);
  CHECK(j["emb_c"].size() == 2);

  auto report = validate(make_structure("000", {Rat(1), Rat(2), Rat(1)}));
  auto rj = to_json(report);
  CHECK(rj["ok"] == false);
  CHECK(rj["violations"][0]["kind"] == "min_law");
  CHECK(rj["violations"][0]["expected"] == "1/1");
}
