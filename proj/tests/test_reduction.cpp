#include <catch_amalgamated.hpp>

#include "forge/reduction.hpp"

using namespace forge;

TEST_CASE("the sum order over a family") {
  FamilyPtr dec = dec_family();
  // fiber tops are always members
  CHECK(sum_member(*dec, pair_code(0, 0)));
  CHECK(sum_member(*dec, pair_code(7, 0)));
  // DEC_2 contains <1,0> but not <0,1>
  CHECK(sum_member(*dec, pair_code(2, seq_code({1, 0}) + 1)));
  CHECK_FALSE(sum_member(*dec, pair_code(2, seq_code({0, 1}) + 1)));
  // index first, top maximal within a fiber, KB below it
  CHECK(sum_compare(pair_code(0, 0), pair_code(1, 0)) == Cmp::Less);
  CHECK(sum_compare(pair_code(2, seq_code({0}) + 1), pair_code(2, 0)) == Cmp::Less);
  CHECK(sum_compare(pair_code(2, seq_code({1, 0}) + 1), pair_code(2, seq_code({1}) + 1)) == Cmp::Less);
  CHECK(sum_compare(pair_code(3, 0), pair_code(3, 0)) == Cmp::Equal);
}

TEST_CASE("the base clause of the recursion") {
  FamilyPtr dec = dec_family();
  FixSystem sys(f_prae_dilator(dec));
  JTable table = build_J(dec, sys, 50);
  // J(<0, sigma>) = xi<{}, left sigma>
  TermPtr bot_root = table.at(pair_code(0, seq_code({}) + 1));
  REQUIRE(bot_root != nullptr);
  CHECK(bot_root->children.empty());
  CHECK(bot_root->sigma == f_encode(FElem::mk_left(seq_code({}) + 1)));
  TermPtr top0 = table.at(pair_code(0, 0));
  REQUIRE(top0 != nullptr);
  CHECK(top0->sigma == f_encode(FElem::mk_left(0)));
}

TEST_CASE("the top clause stacks the previous top") {
  FamilyPtr dec = dec_family();
  FixSystem sys(f_prae_dilator(dec));
  JTable table = build_J(dec, sys, 300);
  TermPtr top0 = table.at(pair_code(0, 0));
  TermPtr top1 = table.at(pair_code(1, 0));
  REQUIRE(top1 != nullptr);
  // J(<n+1, top>) = xi<{J(<n, top>)}, <1, inf, star>>
  REQUIRE(top1->children.size() == 1);
  CHECK(top1->children[0] == top0);
  FElem inner = *f_decode(top1->sigma);
  CHECK_FALSE(inner.left);
  CHECK(inner.n == ninf::infinity);
  CHECK(top1->height == top0->height + 1);
}

TEST_CASE("the embedding preserves the sum order") {
  FamilyPtr dec = dec_family();
  FixSystem sys(f_prae_dilator(dec));
  JTable table = build_J(dec, sys, 200);
  REQUIRE_FALSE(table.entries.empty());
  JVerdict v = verify_J(table, sys);
  CHECK(v.ok());
  CHECK(v.pairs_checked > 0);
  // spot check clause (iii): non-top entries sit below their fiber top
  for (const JEntry& e : table.entries) {
    if (e.fiber_code == 0) continue;
    TermPtr top = table.at(pair_code(static_cast<Code>(e.n), 0));
    REQUIRE(top != nullptr);
    CHECK(sys.compare(e.image, top) == Cmp::Less);
  }
}

TEST_CASE("the reduction also works over the refuted family") {
  // the embedding J itself exists for BAD too; only well-foundedness of
  // the target is lost, which build_J does not claim
  FamilyPtr bad = bad_family();
  FixSystem sys(f_prae_dilator(bad));
  JTable table = build_J(bad, sys, 120);
  CHECK(verify_J(table, sys).ok());
}
