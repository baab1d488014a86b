#include <catch_amalgamated.hpp>

#include "forge/f_construction.hpp"

using namespace forge;

TEST_CASE("the index order with -1 and infinity") {
  CHECK(ninf::compare(ninf::minus_one, ninf::of_nat(0)) == Cmp::Less);
  CHECK(ninf::compare(ninf::of_nat(3), ninf::of_nat(4)) == Cmp::Less);
  CHECK(ninf::compare(ninf::of_nat(100), ninf::infinity) == Cmp::Less);
  CHECK(ninf::compare(ninf::minus_one, ninf::infinity) == Cmp::Less);
  CHECK(ninf::compare(ninf::infinity, ninf::infinity) == Cmp::Equal);
  CHECK(ninf::nat_of(ninf::of_nat(9)) == 9);
}

TEST_CASE("F-element coding round trips") {
  FElem left = FElem::mk_left(seq_code({0}) + 1);
  auto back = f_decode(f_encode(left));
  REQUIRE(back);
  CHECK(back->left);
  CHECK(back->left_sigma == left.left_sigma);

  FElem right = FElem::mk_right(4, ninf::of_nat(1), HSeq{{0, 1}, {2, 0}});
  back = f_decode(f_encode(right));
  REQUIRE(back);
  CHECK_FALSE(back->left);
  CHECK(back->x == 4);
  CHECK(back->n == ninf::of_nat(1));
  CHECK(back->h == right.h);
  // star fibers carry no fiber data
  CHECK_FALSE(f_decode(seq_code({1, 0, ninf::minus_one, 5})).has_value());
}

TEST_CASE("membership in F[DEC](X)") {
  FamilyPtr dec = dec_family();
  OrderPtr X = nat_order();
  // left summand: top and elements of DEC_0 (just the root)
  CHECK(f_member(*dec, *X, FElem::mk_left(0)));
  CHECK(f_member(*dec, *X, FElem::mk_left(seq_code({}) + 1)));
  CHECK_FALSE(f_member(*dec, *X, FElem::mk_left(seq_code({0}) + 1)));  // <0> not in DEC_0
  // star fibers at -1 and infinity
  CHECK(f_member(*dec, *X, FElem::mk_right(3, ninf::minus_one)));
  CHECK(f_member(*dec, *X, FElem::mk_right(3, ninf::infinity)));
  // finite fibers live in H[n](X|x): entries must lie strictly below x
  CHECK(f_member(*dec, *X, FElem::mk_right(5, ninf::of_nat(0), {{2 + 1, 0}})));
  CHECK_FALSE(f_member(*dec, *X, FElem::mk_right(5, ninf::of_nat(0), {{7 + 1, 0}})));
  CHECK_FALSE(f_member(*dec, *X, FElem::mk_right(5, ninf::of_nat(0), {{2 + 1, 1}})));  // 1 not < 1
}

TEST_CASE("comparison in F[DEC](X)") {
  FamilyPtr dec = dec_family();
  OrderPtr X = nat_order();
  FElem root = FElem::mk_left(seq_code({}) + 1);
  FElem top0 = FElem::mk_left(0);
  FElem r3 = FElem::mk_right(3, ninf::minus_one);
  // the left summand comes first; within it, top is maximal
  CHECK(f_compare(*dec, *X, root, top0) == Cmp::Less);
  CHECK(f_compare(*dec, *X, top0, r3) == Cmp::Less);
  // right components compare by x first, then the fiber index, then KB
  CHECK(f_compare(*dec, *X, r3, FElem::mk_right(4, ninf::minus_one)) == Cmp::Less);
  CHECK(f_compare(*dec, *X, r3, FElem::mk_right(3, ninf::infinity)) == Cmp::Less);
  CHECK(f_compare(*dec, *X, FElem::mk_right(3, ninf::of_nat(0)), FElem::mk_right(3, ninf::infinity)) == Cmp::Less);
  FElem shorter = FElem::mk_right(9, ninf::of_nat(0), {{1, 0}});
  FElem longer = FElem::mk_right(9, ninf::of_nat(0), {{1, 0}, {0, 0}});
  CHECK(f_compare(*dec, *X, longer, shorter) == Cmp::Less);  // KB: end extension first
}

TEST_CASE("mu^F marks the smallest right component over each x") {
  FamilyPtr dec = dec_family();
  OrderPtr X = nat_order();
  FElem mu = f_mu(4);
  CHECK(mu.n == ninf::minus_one);
  // every right element over x = 4 is >= mu, everything over smaller x is below
  CHECK(f_compare(*dec, *X, mu, FElem::mk_right(4, ninf::of_nat(2))) == Cmp::Less);
  CHECK(f_compare(*dec, *X, FElem::mk_right(3, ninf::infinity), mu) == Cmp::Less);
  auto T = f_prae_dilator(dec);
  CHECK(T->mu1() == f_encode(f_mu(0)));
}

TEST_CASE("F satisfies the prae-dilator and normality laws at desk scale") {
  auto T = f_prae_dilator(dec_family());
  CHECK(validate_prae_dilator(*T, 3, 300).ok());
  CHECK(validate_normal(*T, 3, 300).ok());
}

TEST_CASE("coded isomorphism splits the support at its largest element") {
  FamilyPtr dec = dec_family();
  OrderPtr X = canonical_order(4);
  for (Code c : f_order(dec, X)->enumerate(800)) {
    FElem e = *f_decode(c);
    DElement coded = f_to_coded(*dec, X, e);
    FElem back = f_from_coded(*dec, X, coded);
    CHECK(f_encode(back) == c);
    if (!e.left) {
      // x is the maximum of the support
      std::vector<Code> en = increasing_enumeration(coded.support);
      REQUIRE_FALSE(en.empty());
      CHECK(en.back() == e.x);
    }
  }
  CHECK_THROWS_AS(f_to_coded(*dec, X, FElem::mk_right(7, ninf::minus_one)), NotMember);
}
