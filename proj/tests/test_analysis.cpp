#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "helpers.hpp"
#include "lexforge/analysis.hpp"
#include "lexforge/embedding.hpp"
#include "lexforge/extension.hpp"
#include "lexforge/generic.hpp"
#include "lexforge/tree.hpp"

using namespace lexforge;
using testing::make_structure;

TEST_CASE("cut enumeration") {
  CHECK(enumerate_cuts(LexStructure{}).size() == 1);
  CHECK(enumerate_cuts(make_structure("000", {Rat(0), Rat(0), Rat(0)})).size() == 4);

  auto lex = lex_model(2, 2, {Rat(0), Rat(1)});
  auto cuts = enumerate_cuts(lex);
  REQUIRE(cuts.size() == 5);
  CHECK(cuts[0].lower.empty());
  CHECK(cuts[2].lower == std::vector<PointId>{0, 1});  // a lex prefix
  CHECK(cuts[4].upper.empty());
}

TEST_CASE("insertion into a cut propagates and validates") {
  auto s = make_structure("00", {Rat(2)});
  auto cuts = enumerate_cuts(s);

  auto grown = insert_into_cut(s, cuts[1], Color::zero, Rat(2), Rat(3));
  CHECK(validate(grown).ok);
  CHECK(grown.size() == 3);
  CHECK(grown.f(2, 0) == Rat(2));
  CHECK(grown.f(2, 1) == Rat(3));

  // left-end cut needs only the right value; a 1-colored insertion leaves
  // the 0-colored census alone
  auto marked = insert_into_cut(s, cuts[0], Color::one, {}, Rat(7));
  CHECK(validate(marked).ok);
  CHECK(marked.count_color(Color::zero) == s.count_color(Color::zero));

  // min(3,3) = 3 but the cut forces 2
  try {
    insert_into_cut(s, cuts[1], Color::zero, Rat(3), Rat(3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2/1") != std::string::npos);
  }

  // malformed cuts are rejected
  Cut scrambled{{1}, {0}};
  CHECK_THROWS_AS(insert_into_cut(s, scrambled, Color::zero, Rat(1), Rat(1)), Error);
  Cut short_cut{{0}, {}};
  CHECK_THROWS_AS(insert_into_cut(s, short_cut, Color::zero, Rat(1), Rat(1)), Error);
}

TEST_CASE("completion fills every internal cut with a marked point") {
  CHECK(complete_structure(LexStructure{}).size() == 0);
  CHECK(complete_structure(make_structure("0", {})).size() == 1);

  auto pair = make_structure("00", {Rat(1)});
  auto done = complete_structure(pair);
  REQUIRE(done.size() == 3);
  CHECK(done.color_at(1) == Color::one);
  CHECK(done.f_at(0, 1) == Rat(1));
  CHECK(done.f_at(1, 2) == Rat(1));
  CHECK(validate(done).ok);

  auto lex = lex_model(2, 2, {Rat(0), Rat(1)});
  done = complete_structure(lex);
  CHECK(done.size() == 7);
  CHECK(done.count_color(Color::zero) == 4);
  CHECK(validate(done).ok);
  CHECK(is_identity_substructure(lex, done));

  // no two original-consecutive points stay adjacent
  for (int i = 0; i + 1 < lex.size(); ++i)
    CHECK(done.position_of(lex.id_at(i + 1)) - done.position_of(lex.id_at(i)) == 2);
}

TEST_CASE("completion invariants on random structures") {
  std::mt19937_64 rng(314);
  const std::vector<Rat> pool{Rat(0), Rat(1), Rat(3, 2)};
  for (int run = 0; run < 100; ++run) {
    auto s = random_structure(int(rng() % 7), pool, rng());
    auto done = complete_structure(s);
    CHECK(validate(done).ok);
    CHECK(done.count_color(Color::zero) == s.count_color(Color::zero));
    CHECK(is_identity_substructure(s, done));
    if (s.size() > 0) CHECK(done.size() == 2 * s.size() - 1);
  }
}

TEST_CASE("plain linear orders embed at a constant value") {
  CHECK(embed_linear_order(0, Rat(7)).size() == 0);

  auto s = embed_linear_order(3, Rat(7));
  REQUIRE(s.size() == 3);
  CHECK(validate(s).ok);
  CHECK(s.f(0, 2) == Rat(7));
  CHECK(s.count_color(Color::zero) == 3);

  // saturation keeps the embedded order intact
  auto grown = saturate(embed_linear_order(4, Rat(0)), {Rat(0), Rat(1)}, 1, 3).structure;
  CHECK(is_identity_substructure(embed_linear_order(4, Rat(0)), grown));
}

TEST_CASE("supremum checks") {
  // b < a and nothing between
  auto two = make_structure("00", {Rat(1)});
  CHECK(check_supremum(two, 1, {0}));

  // b < z < a with f(z,a) = 2, f(b,a) = 1: z lies between, and the
  // sufficient condition correctly stays silent (1 is not above 2)
  auto three = make_structure("000", {Rat(1), Rat(1), Rat(2)});
  CHECK(!check_supremum(three, 2, {0}));
  CHECK(!supremum_condition(three, 2, {0}));

  // y close to x at 3, the other point far at 1: the condition fires
  auto fired = make_structure("000", {Rat(1), Rat(1), Rat(3)});
  CHECK(supremum_condition(fired, 2, {1}));
  CHECK(check_supremum(fired, 2, {1}));

  CHECK_THROWS_AS(check_supremum(two, 0, {1}), Error);  // Y not below x
}

TEST_CASE("sufficient condition implies the brute-force answer on random data") {
  std::mt19937_64 rng(2718);
  const std::vector<Rat> pool{Rat(0), Rat(1), Rat(2)};
  int fired = 0;
  for (int run = 0; run < 300; ++run) {
    auto s = random_structure(2 + int(rng() % 6), pool, rng());
    const int xpos = 1 + int(rng() % (s.size() - 1));
    const PointId x = s.id_at(xpos);
    std::vector<PointId> y_set;
    for (int i = 0; i < xpos; ++i)
      if (rng() % 2) y_set.push_back(s.id_at(i));
    if (supremum_condition(s, x, y_set)) {
      ++fired;
      CHECK(check_supremum(s, x, y_set));  // would throw internally otherwise
    } else {
      check_supremum(s, x, y_set);  // exercise the assertion path
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("gap profile decision table") {
  GapProfile p;
  p.witness_side = WitnessSide::in_d;
  p.witness_cofinal = true;
  p.witness_coinitial = true;
  p.fset_has_sup = false;
  p.upperset_has_inf = false;
  CHECK(classify_gap_profile(p) == GapClass::irremovable);

  p.witness_side = WitnessSide::in_e;
  CHECK(classify_gap_profile(p) == GapClass::irremovable);

  p.witness_side = WitnessSide::none;
  p.witness_cofinal = p.witness_coinitial = false;
  CHECK(classify_gap_profile(p) == GapClass::removable);

  p.fset_has_sup = true;
  p.upperset_has_inf = true;
  CHECK(classify_gap_profile(p) == GapClass::not_gap);

  // a supremum always blocks irremovability
  p.witness_side = WitnessSide::in_d;
  p.witness_cofinal = p.witness_coinitial = true;
  CHECK(classify_gap_profile(p) == GapClass::not_gap);

  p.fset_has_sup = true;
  p.upperset_has_inf = false;
  CHECK_THROWS_AS(classify_gap_profile(p), Error);
}

TEST_CASE("witness density reports per value and side") {
  auto lex = lex_model(2, 2, {Rat(0), Rat(1)});
  // anchor 01: no left witness at 0 (f(00,01)=1), right witness 10 at 0
  auto report = witness_density(lex, 1, {Rat(0)});
  REQUIRE(report.size() == 1);
  CHECK(!report[0].left);
  CHECK(report[0].right == 2);

  auto lonely = make_structure("0", {});
  for (const auto& entry : witness_density(lonely, 0, {Rat(0), Rat(1)})) {
    CHECK(!entry.left);
    CHECK(!entry.right);
  }
}

TEST_CASE("trees map to leaf orders with common-ancestor depths") {
  // single node: one leaf, one branch, the cut after it
  auto lone = make_tree(TreeNode{});
  auto order = tree_to_order(lone);
  CHECK(order.structure.size() == 1);
  REQUIRE(order.branches.size() == 1);
  CHECK(order.branches[0].path.empty());
  CHECK(order.branches[0].cut_index == 1);

  // complete binary tree of height 2: 4 leaves, values are lca depths
  auto cbt = complete_tree(2, 2);
  order = tree_to_order(cbt);
  REQUIRE(order.structure.size() == 4);
  CHECK(validate(order.structure).ok);
  CHECK(order.structure.f(0, 1) == Rat(1));
  CHECK(order.structure.f(0, 2) == Rat(0));
  CHECK(order.structure.f(2, 3) == Rat(1));
  REQUIRE(order.branches.size() == 4);
  std::set<int> cut_indices;
  for (const auto& b : order.branches) {
    CHECK(b.path.size() == 2);
    cut_indices.insert(b.cut_index);
  }
  CHECK(cut_indices.size() == 4);  // injective into the 5 cuts

  // a path has a single branch
  TreeNode path;
  path.children.push_back(TreeNode{});
  path.children[0].children.push_back(TreeNode{});
  order = tree_to_order(make_tree(path));
  CHECK(order.structure.size() == 1);
  CHECK(order.branches.size() == 1);
  CHECK(order.branches[0].path == std::vector<int>{0, 0});
}

TEST_CASE("branch-to-cut mapping is injective across tree shapes") {
  std::mt19937_64 rng(1618);
  for (int run = 0; run < 60; ++run) {
    // random tree with bounded fanout and depth
    TreeNode root;
    std::function<void(TreeNode&, int)> grow = [&](TreeNode& node, int depth) {
      if (depth >= 4) return;
      const int kids = int(rng() % 4);
      for (int i = 0; i < kids; ++i) {
        node.children.push_back(TreeNode{});
        grow(node.children.back(), depth + 1);
      }
    };
    grow(root, 0);
    auto tree = make_tree(root);
    auto order = tree_to_order(tree);
    CHECK(validate(order.structure).ok);
    CHECK(static_cast<int>(order.branches.size()) == tree.leaf_count());
    std::set<int> cuts;
    for (const auto& b : order.branches) cuts.insert(b.cut_index);
    CHECK(cuts.size() == order.branches.size());
  }
}
